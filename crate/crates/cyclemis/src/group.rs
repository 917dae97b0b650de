//! The dihedral group `D_2n` and its action on cyclic binary words.
//!
//! `D_2n` is generated by the rotation `sigma` (carrying vertex `v_i` to
//! `v_{i+1}`) and the reflection `tau` (carrying `v_i` to `v_{n-i}`), with
//! `sigma^n = 1`, `tau^2 = 1` and `tau sigma = sigma^{-1} tau`. Words are
//! bit vectors indexed by `Z_n`; the bit at `i` records whether vertex
//! `v_i` belongs to the set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A length-n vector of bits indexed by `Z_n`.
///
/// Equality and ordering are positional (plain lexicographic on the bits);
/// rotational equivalence is what orbits are for.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    bits: Vec<bool>,
}

impl CyclicWord {
    pub fn new(bits: Vec<bool>) -> CyclicWord {
        assert!(!bits.is_empty(), "cyclic word must have length >= 1");
        CyclicWord { bits }
    }

    /// Word of length n with ones exactly at the given indices.
    pub fn from_ones(n: usize, ones: &[usize]) -> CyclicWord {
        let mut bits = vec![false; n];
        for &i in ones {
            bits[i % n] = true;
        }
        CyclicWord::new(bits)
    }

    // a word is never empty, so there is no is_empty to pair with len
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Bit at index i, taken modulo the length.
    pub fn bit(&self, i: i64) -> bool {
        let n = self.bits.len() as i64;
        self.bits[i.rem_euclid(n) as usize]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Indices holding a one, increasing.
    pub fn ones(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The word of length d*n obtained by repeating this word d times; its
    /// bit at l is this word's bit at l mod n.
    pub fn d_concatenate(&self, d: usize) -> CyclicWord {
        assert!(d >= 1, "concatenation count must be >= 1, got {d}");
        let mut bits = Vec::with_capacity(d * self.bits.len());
        for _ in 0..d {
            bits.extend_from_slice(&self.bits);
        }
        CyclicWord::new(bits)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}

impl FromStr for CyclicWord {
    type Err = String;

    fn from_str(s: &str) -> Result<CyclicWord, String> {
        if s.is_empty() {
            return Err("cyclic word must have length >= 1".into());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid bit character {other:?}")),
            })
            .collect::<Result<Vec<bool>, String>>()
            .map(CyclicWord::new)
    }
}

/// An element `sigma^j tau^t` of `D_2n`, normalized to `0 <= j < n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    rot: usize,
    refl: bool,
}

impl DihedralElement {
    pub fn new(n: usize, rotation: i64, reflection: bool) -> DihedralElement {
        assert!(n >= 1, "group degree must be >= 1");
        DihedralElement {
            n,
            rot: rotation.rem_euclid(n as i64) as usize,
            refl: reflection,
        }
    }

    pub fn identity(n: usize) -> DihedralElement {
        DihedralElement::new(n, 0, false)
    }

    /// `sigma^j`.
    pub fn rotation(n: usize, j: i64) -> DihedralElement {
        DihedralElement::new(n, j, false)
    }

    /// `sigma^j tau`.
    pub fn reflection(n: usize, j: i64) -> DihedralElement {
        DihedralElement::new(n, j, true)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn rotation_exponent(&self) -> usize {
        self.rot
    }

    pub fn is_reflection(&self) -> bool {
        self.refl
    }

    /// Group product: `self` applied after `other`, so that
    /// `compose(g, h).apply(w) == g.apply(&h.apply(w))`.
    ///
    /// With `tau sigma = sigma^{-1} tau` the exponents combine as
    /// `sigma^a tau^s . sigma^b tau^t = sigma^(a + (-1)^s b) tau^(s xor t)`.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(
            self.n, other.n,
            "cannot compose elements of D_2n for different n"
        );
        let b = other.rot as i64;
        let signed = if self.refl { -b } else { b };
        DihedralElement::new(self.n, self.rot as i64 + signed, self.refl ^ other.refl)
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.refl {
            *self // reflections are involutions
        } else {
            DihedralElement::new(self.n, -(self.rot as i64), false)
        }
    }

    /// Image of a word: `sigma^j` sends the bit at `k - j` to `k`, and a
    /// reflection `sigma^j tau` reads the bit at `j - k`.
    pub fn apply(&self, w: &CyclicWord) -> CyclicWord {
        assert_eq!(
            w.len(),
            self.n,
            "word length must equal the group degree"
        );
        let j = self.rot as i64;
        let bits = (0..self.n as i64)
            .map(|k| if self.refl { w.bit(j - k) } else { w.bit(k - j) })
            .collect();
        CyclicWord::new(bits)
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.refl) {
            (0, false) => write!(f, "1"),
            (j, false) => write!(f, "s^{j}"),
            (0, true) => write!(f, "t"),
            (j, true) => write!(f, "s^{j} t"),
        }
    }
}

/// Which symmetry group acts: the full dihedral group of order 2n, or its
/// rotation subgroup of order n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Action {
    Dihedral,
    Rotation,
}

impl Action {
    pub fn order(&self, n: usize) -> usize {
        match self {
            Action::Dihedral => 2 * n,
            Action::Rotation => n,
        }
    }

    /// Every element of the acting group, rotations first.
    pub fn elements(&self, n: usize) -> Vec<DihedralElement> {
        let mut out: Vec<DihedralElement> =
            (0..n).map(|j| DihedralElement::rotation(n, j as i64)).collect();
        if let Action::Dihedral = self {
            out.extend((0..n).map(|j| DihedralElement::reflection(n, j as i64)));
        }
        out
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Dihedral => "dihedral",
            Action::Rotation => "rotation",
        })
    }
}

/// An orbit of a cyclic word under a group action.
///
/// `size * stab_size` equals the order of the acting group, and
/// `stab_elems` is closed under composition and inverse.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Lexicographically smallest image.
    pub canonical: CyclicWord,
    pub size: usize,
    pub stab_size: usize,
    pub stab_elems: Vec<DihedralElement>,
}

/// All elements of the full dihedral group fixing w.
pub fn stabilizer(w: &CyclicWord) -> Vec<DihedralElement> {
    stabilizer_in(w, Action::Dihedral)
}

/// All elements of the chosen acting group fixing w.
pub fn stabilizer_in(w: &CyclicWord, action: Action) -> Vec<DihedralElement> {
    action
        .elements(w.len())
        .into_iter()
        .filter(|g| &g.apply(w) == w)
        .collect()
}

/// Distinct images of w under the action, sorted ascending.
pub fn orbit_members(w: &CyclicWord, action: Action) -> Vec<CyclicWord> {
    let set: BTreeSet<CyclicWord> = action
        .elements(w.len())
        .iter()
        .map(|g| g.apply(w))
        .collect();
    set.into_iter().collect()
}

/// Lexicographically smallest image of w under the action.
pub fn canonical_form(w: &CyclicWord, action: Action) -> CyclicWord {
    action
        .elements(w.len())
        .iter()
        .map(|g| g.apply(w))
        .min()
        .expect("group is never empty")
}

/// The orbit of w under the action, with the stabilizer taken inside the
/// acting group.
pub fn orbit(w: &CyclicWord, action: Action) -> Orbit {
    let members = orbit_members(w, action);
    let stab_elems = stabilizer_in(w, action);
    Orbit {
        canonical: members[0].clone(),
        size: members.len(),
        stab_size: stab_elems.len(),
        stab_elems,
    }
}
