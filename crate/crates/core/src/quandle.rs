//! Finite quandles: construction from standard families, axiom verification,
//! right translations, the inner automorphism group, orbits and connectivity.
//!
//! Elements are `0..n-1` internally; display output shifts to `1..n`.

use crate::linalg::Matrix;
use crate::{Error, Result};
use std::collections::HashMap;

/// Result of checking the three quandle axioms on an operation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    /// For each `y`, the column map `x ↦ x∗y` is a permutation.
    pub bijective_columns: bool,
    /// `(x∗y)∗z = (x∗z)∗(y∗z)` for all triples.
    pub right_distributive: bool,
    /// `x∗x = x` for all `x`.
    pub idempotent: bool,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.bijective_columns && self.right_distributive && self.idempotent
    }
}

/// Exhaustively checks the quandle axioms on `table` (`table[x][y] = x∗y`).
///
/// Errors when the table is ragged or contains an out-of-range entry.
pub fn check_axioms(table: &[Vec<usize>]) -> Result<AxiomReport> {
    let n = table.len();
    for row in table {
        if row.len() != n {
            return Err(Error::Domain("operation table is not square".into()));
        }
        if let Some(&e) = row.iter().find(|&&e| e >= n) {
            return Err(Error::Domain(format!(
                "table entry {e} out of range 0..{n}"
            )));
        }
    }
    let mut bijective_columns = true;
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            seen[table[x][y]] = true;
        }
        if seen.iter().any(|&s| !s) {
            bijective_columns = false;
            break;
        }
    }
    let mut right_distributive = true;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[table[x][z]][table[y][z]] {
                    right_distributive = false;
                    break 'outer;
                }
            }
        }
    }
    let idempotent = (0..n).all(|x| table[x][x] == x);
    Ok(AxiomReport {
        bijective_columns,
        right_distributive,
        idempotent,
    })
}

/// A finite quandle given by its operation table, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    /// Validates all three axioms and wraps the table.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::Domain("quandle must have at least one element".into()));
        }
        let report = check_axioms(&table)?;
        if !report.all_hold() {
            return Err(Error::Axiom(format!(
                "bijective_columns={}, right_distributive={}, idempotent={}",
                report.bijective_columns, report.right_distributive, report.idempotent
            )));
        }
        Ok(FiniteQuandle {
            n: table.len(),
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ∗ y`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// The dihedral quandle `x∗y = 2y − x (mod n)` on `0..n-1`.
pub fn dihedral(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::Domain("dihedral: n must be >= 1".into()));
    }
    let ni = n as i64;
    let table = (0..ni)
        .map(|x| {
            (0..ni)
                .map(|y| (2 * y - x).rem_euclid(ni) as usize)
                .collect()
        })
        .collect();
    FiniteQuandle::from_table(table)
}

/// The Alexander quandle on `Z_n` with `f` = multiplication by `u`:
/// `x∗y = u·x + (1−u)·y (mod n)`. Requires `gcd(u, n) = 1`.
pub fn alexander(n: usize, u: i64) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::Domain("alexander: n must be >= 1".into()));
    }
    let ni = n as i64;
    let ur = u.rem_euclid(ni);
    if gcd(ur as u64, n as u64) != 1 {
        return Err(Error::Domain(format!(
            "alexander: u = {u} is not a unit mod {n}"
        )));
    }
    let table = (0..ni)
        .map(|x| {
            (0..ni)
                .map(|y| (ur * x + (1 - ur) * y).rem_euclid(ni) as usize)
                .collect()
        })
        .collect();
    FiniteQuandle::from_table(table)
}

/// The conjugation quandle of a group: `x∗y = y·x·y⁻¹`.
pub fn conjugation_quandle(cayley: &[Vec<usize>]) -> Result<FiniteQuandle> {
    let g = GroupTable::validate(cayley)?;
    let n = g.n;
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| g.mul(g.mul(y, x), g.inv(y)))
                .collect()
        })
        .collect();
    FiniteQuandle::from_table(table)
}

/// The core quandle of a group: `x∗y = y·x⁻¹·y`.
pub fn core_quandle(cayley: &[Vec<usize>]) -> Result<FiniteQuandle> {
    let g = GroupTable::validate(cayley)?;
    let n = g.n;
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| g.mul(g.mul(y, g.inv(x)), y))
                .collect()
        })
        .collect();
    FiniteQuandle::from_table(table)
}

/// A validated group Cayley table (`cayley[i][j] = i·j`).
struct GroupTable {
    n: usize,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Exhaustively verifies closure, associativity, identity and inverses.
    fn validate(cayley: &[Vec<usize>]) -> Result<Self> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::Domain("group table is empty".into()));
        }
        for row in cayley {
            if row.len() != n || row.iter().any(|&e| e >= n) {
                return Err(Error::Domain("invalid group table shape or entry".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| Error::Domain("group table has no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| cayley[x][y] == identity && cayley[y][x] == identity)
                .ok_or_else(|| Error::Domain(format!("element {x} has no inverse")))?;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]] {
                        return Err(Error::Domain(format!(
                            "group table not associative at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            n,
            table: cayley.to_vec(),
            inverse,
        })
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A permutation of `0..n-1`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Checks that `images` is a bijection on `0..n-1`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The permutation matrix sending `e_x` to `e_{images[x]}`.
    pub fn matrix(&self) -> Matrix {
        Matrix::permutation(&self.images)
    }
}

/// The right translation `R_x : y ↦ y∗x`.
pub fn right_translation(q: &FiniteQuandle, x: usize) -> Permutation {
    debug_assert!(x < q.order());
    Permutation {
        images: (0..q.order()).map(|y| q.op(y, x)).collect(),
    }
}

/// A permutation group generated by labeled permutations, with one shortest
/// word stored per element.
///
/// Words list generator labels in application order: `[a, b]` is the map
/// "apply the generator labeled `a`, then the one labeled `b`". Words are the
/// breadth-first shortest ones, ties broken by lexicographic label order.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generators: Vec<(usize, Permutation)>,
    words: Vec<Vec<usize>>,
}

impl PermutationGroup {
    /// Breadth-first closure of the generators under composition.
    pub fn generate(degree: usize, generators: Vec<(usize, Permutation)>) -> Self {
        assert!(generators.iter().all(|(_, p)| p.degree() == degree));
        let mut elements = vec![Permutation::identity(degree)];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for (label, gen) in &generators {
                let next = gen.compose(&current);
                if !index.contains_key(&next) {
                    let mut word = words[head].clone();
                    word.push(*label);
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    words.push(word);
                }
            }
            head += 1;
        }
        PermutationGroup {
            elements,
            index,
            generators,
            words,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[(usize, Permutation)] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// The stored shortest word for `p`, if `p` is in the group.
    pub fn word_of(&self, p: &Permutation) -> Option<&[usize]> {
        self.index.get(p).map(|&i| self.words[i].as_slice())
    }

    pub fn word_of_index(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Evaluates a word by composing the labeled generators in application
    /// order.
    pub fn evaluate_word(&self, word: &[usize]) -> Permutation {
        let degree = self.elements[0].degree();
        let mut acc = Permutation::identity(degree);
        for label in word {
            let gen = &self
                .generators
                .iter()
                .find(|(l, _)| l == label)
                .expect("word references unknown generator")
                .1;
            acc = gen.compose(&acc);
        }
        acc
    }
}

/// The inner automorphism group `Inn(X) = ⟨R_x⟩`, with every element given a
/// shortest word over the quandle-element labels.
pub fn inner_group(q: &FiniteQuandle) -> PermutationGroup {
    let generators = (0..q.order())
        .map(|x| (x, right_translation(q, x)))
        .collect();
    PermutationGroup::generate(q.order(), generators)
}

/// Orbits of the `Inn(X)` action, each sorted ascending, ordered by least
/// element.
pub fn orbits(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let n = q.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            for x in 0..n {
                let image = q.op(y, x);
                if !seen[image] {
                    seen[image] = true;
                    orbit.push(image);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Whether `Inn(X)` acts transitively.
pub fn is_connected(q: &FiniteQuandle) -> bool {
    orbits(q).len() == 1
}

/// Parses the quandle table file format: first line `n`, then `n` lines of
/// `n` space-separated 1-indexed entries.
pub fn parse_table_file(text: &str) -> Result<FiniteQuandle> {
    FiniteQuandle::from_table(parse_table_entries(text)?)
}

/// Parses the table file format without checking the quandle axioms, so
/// callers can report which axioms fail.
pub fn parse_table_entries(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Domain("empty table file".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::Domain("first line must be the element count".into()))?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Domain(format!("expected {n} table rows")))?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad table entry '{tok}'")))
                    .and_then(|e| {
                        if e == 0 {
                            Err(Error::Domain("table entries are 1-indexed".into()))
                        } else {
                            Ok(e - 1)
                        }
                    })
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Domain(format!(
                "row has {} entries, expected {n}",
                row.len()
            )));
        }
        table.push(row);
    }
    Ok(table)
}

/// Formats a quandle in the table file format (1-indexed entries).
pub fn format_table_file(q: &FiniteQuandle) -> String {
    let mut out = format!("{}\n", q.order());
    for row in q.table() {
        let line: Vec<String> = row.iter().map(|e| (e + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
