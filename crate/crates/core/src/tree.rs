//! The Berggren tree.
//!
//! Three unimodular matrices send a primitive Pythagorean triple, read as a
//! column vector, to three larger primitive triples:
//!
//! ```text
//!     | 1 -2  2 |        | 1  2  2 |        | -1  2  2 |
//! A = | 2 -1  2 |    B = | 2  1  2 |    C = | -2  1  2 |
//!     | 2 -2  3 |        | 2  2  3 |        | -2  2  3 |
//! ```
//!
//! Every primitive triple is reached from (3, 4, 5) by a unique word over
//! {A, B, C}, so finite words address tree nodes. The powers of all three
//! matrices have closed forms: Aⁿ and Cⁿ with quadratic polynomial entries,
//! Bⁿ with entries assembled from (3 + 2√2)ⁿ = pₙ + qₙ√2 — the half-integer
//! parts provably cancel, leaving exact integers.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::ppt::{validate_triple, Ppt};
use crate::quad::b1_b2;
use crate::InvariantViolation;

/// One step of descent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            'C' => Some(Letter::C),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Letter {
    type Err = PathParseError;
    fn from_str(s: &str) -> Result<Letter, PathParseError> {
        let mut chars = s.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if let Some(letter) = Letter::from_char(c) {
                return Ok(letter);
            }
        }
        Err(PathParseError {
            found: s.chars().next().unwrap_or('\0'),
            pos: 0,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("invalid path character {found:?} at position {pos}; expected 'A', 'B' or 'C'")]
pub struct PathParseError {
    pub found: char,
    pub pos: usize,
}

/// A finite word over {A, B, C} addressing a node below the root (3, 4, 5).
/// The empty word is the root itself.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePath(Vec<Letter>);

impl TreePath {
    pub fn new() -> TreePath {
        TreePath(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> TreePath {
        TreePath(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for TreePath {
    type Err = PathParseError;
    fn from_str(s: &str) -> Result<TreePath, PathParseError> {
        s.chars()
            .enumerate()
            .map(|(pos, c)| Letter::from_char(c).ok_or(PathParseError { found: c, pos }))
            .collect::<Result<Vec<_>, _>>()
            .map(TreePath)
    }
}

/// A 3×3 matrix with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3 {
    rows: [[BigInt; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(rows: [[BigInt; 3]; 3]) -> Mat3 {
        Mat3 { rows }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Mat3 {
        Mat3 {
            rows: rows.map(|r| r.map(BigInt::from)),
        }
    }

    pub fn identity() -> Mat3 {
        Mat3::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[[BigInt; 3]; 3] {
        &self.rows
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| &self.rows[i][k] * &rhs.rows[k][j]).sum();
            }
        }
        Mat3 { rows }
    }

    /// Matrix–vector product M·v.
    pub fn apply(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        std::array::from_fn(|i| (0..3).map(|j| &self.rows[i][j] * &v[j]).sum())
    }

    pub fn det(&self) -> BigInt {
        let m = &self.rows;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Exact integer inverse, defined only when det = ±1.
    pub fn inverse_unimodular(&self) -> Option<Mat3> {
        let det = self.det();
        let negate = if det == BigInt::one() {
            false
        } else if det == -BigInt::one() {
            true
        } else {
            return None;
        };
        let m = &self.rows;
        let minor = |r: usize, c: usize| -> BigInt {
            let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]]
        };
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // inverse = adjugate / det; the adjugate transposes cofactors.
                let mut cof = minor(j, i);
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                *cell = if negate { -cof } else { cof };
            }
        }
        Some(Mat3 { rows })
    }
}

/// The Berggren descent matrix for a letter.
pub fn base_matrix(letter: Letter) -> Mat3 {
    match letter {
        Letter::A => Mat3::from_i64([[1, -2, 2], [2, -1, 2], [2, -2, 3]]),
        Letter::B => Mat3::from_i64([[1, 2, 2], [2, 1, 2], [2, 2, 3]]),
        Letter::C => Mat3::from_i64([[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]]),
    }
}

/// The child of `t` along `letter`, always again a primitive triple in
/// canonical order with a strictly larger hypotenuse.
pub fn descend(t: &Ppt, letter: Letter) -> Ppt {
    let [x, y, z] = base_matrix(letter).apply(&t.coords());
    let v = validate_triple(x, y, z).expect("descendant of a primitive triple must validate");
    assert!(
        !v.swapped && v.ppt.z() > t.z(),
        "descent must preserve canonical order and grow the hypotenuse"
    );
    v.ppt
}

/// The parent of `t` and the letter leading back down to `t`, or `None` for
/// the root. Recovery tries the three integer inverse matrices and keeps the
/// unique candidate that validates with a smaller hypotenuse.
pub fn parent(t: &Ppt) -> Result<Option<(Ppt, Letter)>, InvariantViolation> {
    if t.is_root() {
        return Ok(None);
    }
    let coords = t.coords();
    let mut found = None;
    let mut count = 0usize;
    for letter in Letter::ALL {
        let inv = base_matrix(letter)
            .inverse_unimodular()
            .expect("base matrices are unimodular");
        let [x, y, z] = inv.apply(&coords);
        if let Ok(v) = validate_triple(x, y, z) {
            if !v.swapped && v.ppt.z() < t.z() {
                count += 1;
                found = Some((v.ppt, letter));
            }
        }
    }
    match (count, found) {
        (1, Some(hit)) => Ok(Some(hit)),
        _ => Err(InvariantViolation(format!(
            "expected exactly one parent for {t}, found {count} candidates"
        ))),
    }
}

/// Fold descent over a word, starting at the root (3, 4, 5).
pub fn descend_path(path: &TreePath) -> Ppt {
    descend_path_from(&Ppt::root(), path)
}

/// Fold descent over a word from an arbitrary starting triple.
pub fn descend_path_from(start: &Ppt, path: &TreePath) -> Ppt {
    path.letters()
        .iter()
        .fold(start.clone(), |t, &l| descend(&t, l))
}

/// The unique word leading from the root to `t`, recovered by climbing.
pub fn path_of(t: &Ppt) -> Result<TreePath, InvariantViolation> {
    let mut letters = Vec::new();
    let mut node = t.clone();
    while let Some((up, letter)) = parent(&node)? {
        letters.push(letter);
        node = up;
    }
    letters.reverse();
    Ok(TreePath(letters))
}

fn exact_half(v: BigInt) -> BigInt {
    assert!(v.is_even(), "half-integer parts of B^n failed to cancel");
    v / BigInt::from(2)
}

/// The closed form of the n-th power of a base matrix; n = 0 yields the
/// identity.
///
/// Aⁿ and Cⁿ have quadratic polynomial entries. Bⁿ is assembled from
/// (3 + 2√2)ⁿ = p + q√2 as ((p ± 1)/2 on the diagonal block, q on the border,
/// p in the corner); the divisions are checked exact rather than rounded.
pub fn matrix_power(letter: Letter, n: u64) -> Mat3 {
    let big = BigInt::from(n);
    let two_n: BigInt = &big << 1;
    let two_n2: BigInt = (&big * &big) << 1;
    match letter {
        Letter::A => Mat3::from_rows([
            [BigInt::one(), -&two_n, two_n.clone()],
            [two_n.clone(), BigInt::one() - &two_n2, two_n2.clone()],
            [two_n, -&two_n2, &two_n2 + BigInt::one()],
        ]),
        Letter::C => Mat3::from_rows([
            [BigInt::one() - &two_n2, two_n.clone(), two_n2.clone()],
            [-&two_n, BigInt::one(), two_n.clone()],
            [-&two_n2, two_n, &two_n2 + BigInt::one()],
        ]),
        Letter::B => {
            let (b1, b2) = b1_b2(n);
            let sign = if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            // (−1)ⁿ/2 + b₁ and (−1)ⁿ⁺¹/2 + b₁ with b₁ = pₙ/2: the halves cancel.
            let diag = exact_half(b1.twice() + &sign);
            let off = exact_half(b1.twice() - &sign);
            let corner = b1.twice().clone(); // 2b₁
            Mat3::from_rows([
                [diag.clone(), off.clone(), b2.clone()],
                [off, diag, b2.clone()],
                [b2.clone(), b2, corner],
            ])
        }
    }
}

/// Whether Aⁿ⁻¹·(3,4,5) equals F(1, n). Holds for every n ≥ 1.
pub fn a_chain_matches_f1n(n: u64) -> bool {
    assert!(n >= 1);
    let via_power = matrix_power(Letter::A, n - 1).apply(&Ppt::root().coords());
    match crate::ppt::f_param(&BigInt::one(), &BigInt::from(n)) {
        Ok((x, y, z)) => via_power == [x, y, z],
        Err(_) => false,
    }
}

/// Breadth-first enumeration of every node with hypotenuse ≤ `z_bound`,
/// ordered by path length and then by letter order A < B < C. Pruning is
/// sound because the hypotenuse strictly grows under descent. The iterator
/// is pulled by the caller, so large scans never materialize the output.
pub fn enumerate_tree(z_bound: u64) -> TreeEnumerator {
    let bound = BigInt::from(z_bound);
    let mut queue = VecDeque::new();
    let root = Ppt::root();
    if root.z() <= &bound {
        queue.push_back((TreePath::new(), root));
    }
    TreeEnumerator { queue, bound }
}

pub struct TreeEnumerator {
    queue: VecDeque<(TreePath, Ppt)>,
    bound: BigInt,
}

impl Iterator for TreeEnumerator {
    type Item = (TreePath, Ppt);

    fn next(&mut self) -> Option<(TreePath, Ppt)> {
        let (path, node) = self.queue.pop_front()?;
        for letter in Letter::ALL {
            let child = descend(&node, letter);
            if child.z() <= &self.bound {
                let mut child_path = path.clone();
                child_path.push(letter);
                self.queue.push_back((child_path, child));
            }
        }
        Some((path, node))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ppt(x: i64, y: i64, z: i64) -> Ppt {
        validate_triple(bi(x), bi(y), bi(z)).unwrap().ppt
    }

    #[test]
    fn descend_from_the_root() {
        assert_eq!(descend(&Ppt::root(), Letter::A), ppt(5, 12, 13));
        assert_eq!(descend(&Ppt::root(), Letter::B), ppt(21, 20, 29));
        assert_eq!(descend(&Ppt::root(), Letter::C), ppt(15, 8, 17));
    }

    #[test]
    fn parent_inverts_descend() {
        assert_eq!(parent(&ppt(5, 12, 13)).unwrap(), Some((Ppt::root(), Letter::A)));
        assert_eq!(parent(&ppt(15, 8, 17)).unwrap(), Some((Ppt::root(), Letter::C)));
        assert_eq!(parent(&Ppt::root()).unwrap(), None);
    }

    #[test]
    fn path_navigation() {
        assert_eq!(descend_path(&TreePath::new()), Ppt::root());
        let aa: TreePath = "AA".parse().unwrap();
        assert_eq!(descend_path(&aa), ppt(7, 24, 25));

        let target = ppt(119, 120, 169);
        let path = path_of(&target).unwrap();
        assert_eq!(descend_path(&path), target);
    }

    #[test]
    fn path_parsing_rejects_bad_characters() {
        assert!("AXB".parse::<TreePath>().is_err());
        let err = "ABx".parse::<TreePath>().unwrap_err();
        assert_eq!((err.found, err.pos), ('x', 2));
        assert_eq!("".parse::<TreePath>().unwrap(), TreePath::new());
    }

    #[test]
    fn matrix_power_examples() {
        assert_eq!(matrix_power(Letter::A, 0), Mat3::identity());
        assert_eq!(matrix_power(Letter::B, 0), Mat3::identity());
        assert_eq!(matrix_power(Letter::C, 0), Mat3::identity());

        assert_eq!(
            matrix_power(Letter::A, 3),
            Mat3::from_i64([[1, -6, 6], [6, -17, 18], [6, -18, 19]])
        );
        assert_eq!(
            matrix_power(Letter::B, 2),
            Mat3::from_i64([[9, 8, 12], [8, 9, 12], [12, 12, 17]])
        );
        let a = base_matrix(Letter::A);
        assert_eq!(matrix_power(Letter::A, 3), a.mul(&a).mul(&a));
        let b = base_matrix(Letter::B);
        assert_eq!(matrix_power(Letter::B, 2), b.mul(&b));
    }

    #[test]
    fn determinants_and_integer_inverses() {
        assert_eq!(base_matrix(Letter::A).det(), bi(1));
        assert_eq!(base_matrix(Letter::B).det(), bi(-1));
        assert_eq!(base_matrix(Letter::C).det(), bi(1));
        for letter in Letter::ALL {
            let m = base_matrix(letter);
            let inv = m.inverse_unimodular().unwrap();
            assert_eq!(m.mul(&inv), Mat3::identity());
            assert_eq!(inv.mul(&m), Mat3::identity());
        }
    }

    #[test]
    fn enumerate_small_bounds() {
        let only_root: Vec<_> = enumerate_tree(5).collect();
        assert_eq!(only_root.len(), 1);
        assert_eq!(only_root[0].1, Ppt::root());

        let nodes: Vec<_> = enumerate_tree(17).map(|(p, t)| (p.to_string(), t)).collect();
        assert_eq!(
            nodes,
            vec![
                (String::new(), Ppt::root()),
                ("A".into(), ppt(5, 12, 13)),
                ("C".into(), ppt(15, 8, 17)),
            ]
        );

        assert_eq!(enumerate_tree(4).count(), 0);
        assert_eq!(enumerate_tree(100).count(), 16);
    }

    #[test]
    fn children_are_distinct_and_grow() {
        for (_, node) in enumerate_tree(500) {
            let kids: Vec<_> = Letter::ALL.iter().map(|&l| descend(&node, l)).collect();
            assert!(kids[0] != kids[1] && kids[1] != kids[2] && kids[0] != kids[2]);
            for kid in kids {
                assert!(kid.z() > node.z());
            }
        }
    }

    #[test]
    fn f1n_holds_for_small_exponents() {
        for n in 1..=50 {
            assert!(a_chain_matches_f1n(n), "n={n}");
        }
    }
}
