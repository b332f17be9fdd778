use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

use super::{Element, GroupOracle};

/// Tables up to this order get a full associativity check.
const FULL_ASSOCIATIVITY_CHECK: usize = 48;
const ASSOCIATIVITY_SAMPLES: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Naming {
    /// `x, x^2, ..., x'` for a cyclic group generated by element 1.
    Cyclic,
    /// `x1, x2, ...` by table index.
    Indexed,
}

/// A finite group given by its multiplication table, generated by all of
/// its nonidentity elements.
///
/// Symbol `k` of the alphabet is the element with table index `k + 1`;
/// index 0 is always the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    table: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    label: String,
    naming: Naming,
    alphabet: Alphabet,
}

impl FiniteGroup {
    /// Validates a multiplication table: square, identity at index 0, Latin
    /// rows and columns, associative (exhaustively for small orders, spot
    /// checked otherwise).
    pub fn from_table(table: Vec<Vec<u32>>, label: impl Into<String>) -> Result<Self> {
        Self::build(table, label.into(), Naming::Indexed, "g")
    }

    fn build(table: Vec<Vec<u32>>, label: String, naming: Naming, letter: &str) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::config("empty group table"));
        }
        if n == 1 {
            return Err(Error::config("trivial group has no nonidentity generators"));
        }
        if n > u32::MAX as usize / 2 {
            return Err(Error::config("group table too large"));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::config(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x as usize >= n) {
                return Err(Error::config(format!("row {i} contains out-of-range entry {x}")));
            }
            if row[0] as usize != i || table[0][i] as usize != i {
                return Err(Error::config("row/column 0 must be the identity"));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[table[i][j] as usize] = true;
                col_seen[table[j][i] as usize] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(Error::config(format!("row or column {i} is not a permutation")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            let ab = table[a][b] as usize;
            let bc = table[b][c] as usize;
            table[ab][c] == table[a][bc]
        };
        if n <= FULL_ASSOCIATIVITY_CHECK {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::config(format!("table not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7ab1e);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::config(format!("table not associative at ({a},{b},{c})")));
                }
            }
        }
        let inverse: Vec<u32> = (0..n)
            .map(|i| table[i].iter().position(|&x| x == 0).unwrap() as u32)
            .collect();
        let alphabet = Self::make_alphabet(&inverse, naming, letter)?;
        Ok(Self { table, inverse, label, naming, alphabet })
    }

    fn element_names(order: usize, naming: Naming, letter: &str) -> Vec<String> {
        (1..order)
            .map(|i| match naming {
                Naming::Cyclic if i == 1 => letter.to_string(),
                Naming::Cyclic if i == order - 1 => format!("{letter}'"),
                Naming::Cyclic => format!("{letter}^{i}"),
                Naming::Indexed => format!("{letter}{i}"),
            })
            .collect()
    }

    fn make_alphabet(inverse: &[u32], naming: Naming, letter: &str) -> Result<Alphabet> {
        let names = Self::element_names(inverse.len(), naming, letter);
        let inv = inverse[1..].iter().map(|&x| x as usize - 1).collect();
        Alphabet::new(names, inv)
    }

    /// Same group with symbols renamed after `letter`.
    pub fn with_letter(&self, letter: &str) -> Result<Self> {
        let mut g = self.clone();
        g.alphabet = Self::make_alphabet(&self.inverse, self.naming, letter)?;
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n)
            .map(|i| (0..n).map(|j| ((i + j) % n) as u32).collect())
            .collect();
        Self::build(table, format!("C{n}"), Naming::Cyclic, "x")
    }

    /// Dihedral group of order `2n`: index `k + n*e` is `r^k s^e`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::config("dihedral group needs n >= 2"));
        }
        let idx = |k: usize, e: usize| (k % n + n * e) as u32;
        let table = (0..2 * n)
            .map(|x| {
                let (a, e) = (x % n, x / n);
                (0..2 * n)
                    .map(|y| {
                        let (b, f) = (y % n, y / n);
                        let k = if e == 0 { a + b } else { a + n - b };
                        idx(k, (e + f) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::build(table, format!("D{n}"), Naming::Indexed, "g")
    }

    /// Symmetric group on three letters, from permutation composition.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() as u32;
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index([q[p[0]], q[p[1]], q[p[2]]]))
                    .collect()
            })
            .collect();
        Self::build(table, "S3".into(), Naming::Indexed, "g").expect("S3 table is a group")
    }

    /// Built-in groups by name: `C<n>`, `D<n>`, `S3`.
    pub fn builtin(name: &str) -> Option<Result<Self>> {
        if name == "S3" {
            return Some(Ok(Self::symmetric3()));
        }
        let parse = |rest: &str| rest.parse::<usize>().ok();
        if let Some(n) = name.strip_prefix('C').and_then(parse) {
            return Some(Self::cyclic(n));
        }
        if let Some(n) = name.strip_prefix('D').and_then(parse) {
            return Some(Self::dihedral(n));
        }
        None
    }

    /// Parses the CSV table format: row `i`, column `j` holds the index of
    /// `g_i * g_j`; row and column 0 are the identity.
    pub fn from_csv_str(text: &str, label: impl Into<String>) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut table = Vec::new();
        for record in reader.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|f| {
                    f.parse::<u32>()
                        .map_err(|_| Error::config(format!("non-integer table entry {f:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            table.push(row);
        }
        Self::from_table(table, label)
    }

    pub fn from_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_csv_str(&text, path.display().to_string())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Table product of element indices.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Element index carried by a symbol.
    pub fn symbol_element(&self, s: Symbol) -> usize {
        s.index() + 1
    }

    pub fn element_symbol(&self, index: usize) -> Option<Symbol> {
        (index > 0 && index < self.len()).then(|| Symbol(index as u16 - 1))
    }

    pub fn element(&self, index: usize) -> Element {
        Element::from_slice(&[index as i32])
    }
}

impl GroupOracle for FiniteGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        self.element(0)
    }

    fn step(&self, g: &Element, s: Symbol) -> Element {
        self.element(self.mul(g.0[0] as usize, self.symbol_element(s)))
    }

    fn describe(&self) -> String {
        format!("finite group {} of order {}", self.label, self.len())
    }

    fn order(&self) -> Option<usize> {
        Some(self.len())
    }
}
