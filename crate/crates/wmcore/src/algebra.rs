//! Exact arithmetic over `Z_m` (`m` an odd prime or 4) and over the integers:
//! residue vectors, monomial transforms, modular ranks and Smith normal form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Errors from the algebraic layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// The modulus is not an odd prime or 4.
    BadModulus(u32),
    /// Operand lengths disagree.
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::BadModulus(m) => write!(f, "modulus {m} is not an odd prime or 4"),
            AlgebraError::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RingKind {
    PrimeField,
    Z4,
}

/// The coefficient ring: `F_p` for an odd prime `p`, or `Z_4`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RingTag {
    modulus: u32,
    kind: RingKind,
}

fn is_odd_prime(m: u32) -> bool {
    if m < 3 || m % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl RingTag {
    /// `Z_m` with `m` an odd prime or 4. `m = 2` is rejected.
    pub fn new(m: u32) -> Result<Self, AlgebraError> {
        if m == 4 {
            Ok(RingTag {
                modulus: 4,
                kind: RingKind::Z4,
            })
        } else if is_odd_prime(m) {
            Ok(RingTag {
                modulus: m,
                kind: RingKind::PrimeField,
            })
        } else {
            Err(AlgebraError::BadModulus(m))
        }
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn kind(self) -> RingKind {
        self.kind
    }

    pub fn is_z4(self) -> bool {
        self.kind == RingKind::Z4
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.modulus as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.modulus
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.modulus - b) % self.modulus
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.modulus
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    pub fn is_unit(self, a: u32) -> bool {
        match self.kind {
            RingKind::PrimeField => a % self.modulus != 0,
            RingKind::Z4 => a % 2 == 1,
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(self.is_unit(a));
        // moduli are tiny, a scan is fine
        (1..self.modulus)
            .find(|&b| self.mul(a, b) == 1)
            .expect("inverse of a unit")
    }

    /// The signed lift of a residue into `{0, 1, -1}`, or `None` for other values.
    pub fn lift_pm1(self, a: u32) -> Option<i64> {
        if a == 0 {
            Some(0)
        } else if a == 1 {
            Some(1)
        } else if a == self.modulus - 1 {
            Some(-1)
        } else {
            None
        }
    }

    /// Magnitude class of a residue under negation: `a` and `-a` share a class.
    /// Classes are `0` and `1..=m/2`.
    pub fn magnitude(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            core::cmp::min(a, self.modulus - a)
        }
    }
}

/// A residue vector over a fixed ring, entries kept in `[0, m)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ModVector {
    ring: RingTag,
    entries: Vec<u32>,
}

impl ModVector {
    pub fn new(ring: RingTag, entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e < ring.modulus()));
        ModVector { ring, entries }
    }

    pub fn zero(ring: RingTag, n: usize) -> Self {
        ModVector {
            ring,
            entries: vec![0; n],
        }
    }

    pub fn from_ints(ring: RingTag, ints: &[i64]) -> Self {
        ModVector {
            ring,
            entries: ints.iter().map(|&v| ring.reduce(v)).collect(),
        }
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: u32) {
        debug_assert!(v < self.ring.modulus());
        self.entries[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Count of entries equal to `value`.
    pub fn count_of(&self, value: u32) -> usize {
        self.entries.iter().filter(|&&e| e == value).count()
    }

    pub fn dot(&self, other: &ModVector) -> u32 {
        debug_assert_eq!(self.len(), other.len());
        let m = self.ring.modulus() as u64;
        let s: u64 = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a as u64 * b as u64) % m)
            .sum();
        (s % m) as u32
    }

    pub fn negated(&self) -> ModVector {
        ModVector {
            ring: self.ring,
            entries: self.entries.iter().map(|&e| self.ring.neg(e)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &ModVector, c: u32) {
        debug_assert_eq!(self.len(), other.len());
        let r = self.ring;
        for (a, &b) in self.entries.iter_mut().zip(&other.entries) {
            *a = r.add(*a, r.mul(c, b));
        }
    }

    pub fn scaled(&self, c: u32) -> ModVector {
        ModVector {
            ring: self.ring,
            entries: self.entries.iter().map(|&e| self.ring.mul(c, e)).collect(),
        }
    }

    /// The integer lift with entries in `{0, 1, -1}`; defined only when every
    /// entry lies in `{0, 1, m-1}`.
    pub fn lift_pm1(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|&e| self.ring.lift_pm1(e)).collect()
    }
}

/// A coordinate permutation together with a sign per source coordinate.
///
/// Acting on a vector: `y[perm[j]] = signs[j] * x[j]`, i.e. coordinate `j`
/// lands at `perm[j]`, possibly negated. This is the equivalence-group
/// element for codes and for weighing matrices alike.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialTransform {
    perm: Vec<u32>,
    signs: Vec<i8>,
}

impl MonomialTransform {
    pub fn new(perm: Vec<u32>, signs: Vec<i8>) -> Self {
        let n = perm.len();
        debug_assert_eq!(signs.len(), n);
        debug_assert!(signs.iter().all(|&s| s == 1 || s == -1));
        debug_assert!({
            let mut seen = vec![false; n];
            perm.iter().all(|&p| {
                let fresh = (p as usize) < n && !seen[p as usize];
                if fresh {
                    seen[p as usize] = true;
                }
                fresh
            })
        });
        MonomialTransform { perm, signs }
    }

    pub fn identity(n: usize) -> Self {
        MonomialTransform {
            perm: (0..n as u32).collect(),
            signs: vec![1; n],
        }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
            && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// `self` followed by `other`: `x.apply(self).apply(other) = x.apply(self.then(other))`.
    pub fn then(&self, other: &MonomialTransform) -> MonomialTransform {
        debug_assert_eq!(self.degree(), other.degree());
        let n = self.degree();
        let mut perm = vec![0u32; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let mid = self.perm[j] as usize;
            perm[j] = other.perm[mid];
            signs[j] = self.signs[j] * other.signs[mid];
        }
        MonomialTransform { perm, signs }
    }

    pub fn inverse(&self) -> MonomialTransform {
        let n = self.degree();
        let mut perm = vec![0u32; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            perm[self.perm[j] as usize] = j as u32;
            signs[self.perm[j] as usize] = self.signs[j];
        }
        MonomialTransform { perm, signs }
    }
}

/// Applies a monomial transform to a residue vector.
pub fn apply_monomial(x: &ModVector, t: &MonomialTransform) -> Result<ModVector, AlgebraError> {
    if x.len() != t.degree() {
        return Err(AlgebraError::LengthMismatch {
            expected: t.degree(),
            got: x.len(),
        });
    }
    let ring = x.ring();
    let mut out = vec![0u32; x.len()];
    for j in 0..x.len() {
        let v = x.get(j);
        out[t.perm[j] as usize] = if t.signs[j] == 1 { v } else { ring.neg(v) };
    }
    Ok(ModVector::new(ring, out))
}

/// Applies a monomial transform to an integer row.
pub fn apply_monomial_int(x: &[i64], t: &MonomialTransform) -> Result<Vec<i64>, AlgebraError> {
    if x.len() != t.degree() {
        return Err(AlgebraError::LengthMismatch {
            expected: t.degree(),
            got: x.len(),
        });
    }
    let mut out = vec![0i64; x.len()];
    for j in 0..x.len() {
        out[t.perm[j] as usize] = t.signs[j] as i64 * x[j];
    }
    Ok(out)
}

/// Row-reduction profile of a matrix over the ring.
///
/// Over `F_p` the span has `p^unit_pivots` elements and `torsion_pivots = 0`.
/// Over `Z_4` the span has type `4^unit_pivots * 2^torsion_pivots`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModRank {
    pub unit_pivots: usize,
    pub torsion_pivots: usize,
}

impl ModRank {
    /// `|span|` as an integer.
    pub fn span_size(&self, ring: RingTag) -> u128 {
        let m = ring.modulus() as u128;
        if ring.is_z4() {
            4u128.pow(self.unit_pivots as u32) * 2u128.pow(self.torsion_pivots as u32)
        } else {
            m.pow(self.unit_pivots as u32)
        }
    }
}

/// Rank of a matrix over the ring, as unit/torsion pivot counts.
///
/// Over `Z_4` the result describes the standard type `4^k1 2^k2`: after unit
/// pivots are eliminated every remaining row is even, and dividing by 2 leaves
/// an `F_2` rank problem whose pivots are independent of the unit part.
pub fn rank_mod(ring: RingTag, rows: &[ModVector]) -> ModRank {
    let mut work: Vec<ModVector> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let n = rows.first().map_or(0, |r| r.len());
    let mut used = 0usize;
    for col in 0..n {
        if let Some(i) = (used..work.len()).find(|&i| ring.is_unit(work[i].get(col))) {
            work.swap(used, i);
            let inv = ring.inv(work[used].get(col));
            let piv = work[used].scaled(inv);
            for (i, r) in work.iter_mut().enumerate() {
                if i != used && r.get(col) != 0 {
                    let c = ring.neg(r.get(col));
                    r.add_scaled(&piv, c);
                }
            }
            work[used] = piv;
            used += 1;
        }
    }
    if !ring.is_z4() {
        return ModRank {
            unit_pivots: used,
            torsion_pivots: 0,
        };
    }
    let mut evens: Vec<Vec<u32>> = work[used..]
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| {
            debug_assert!(r.entries().iter().all(|&e| e % 2 == 0));
            r.entries().iter().map(|&e| (e / 2) % 2).collect()
        })
        .collect();
    let mut k2 = 0usize;
    for col in 0..n {
        if let Some(i) = (k2..evens.len()).find(|&i| evens[i][col] == 1) {
            evens.swap(k2, i);
            for i in 0..evens.len() {
                if i != k2 && evens[i][col] == 1 {
                    for c in 0..n {
                        evens[i][c] ^= evens[k2][c];
                    }
                }
            }
            k2 += 1;
        }
    }
    ModRank {
        unit_pivots: used,
        torsion_pivots: k2,
    }
}

/// A dense integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form diagonal of an integer matrix: `d_1 | d_2 | ...`,
/// nonnegative, zeros trailing. Exact (arbitrary precision internally).
pub fn elementary_divisors(m: &IntMatrix) -> Vec<BigInt> {
    snf_with_transform(m, false).0
}

/// Smith normal form; when `want_right` is set, also returns the unimodular
/// right transform `V` with `U * M * V = diag(d)`, as exact big integers.
pub fn snf_with_transform(m: &IntMatrix, want_right: bool) -> (Vec<BigInt>, Option<Vec<Vec<BigInt>>>) {
    let (r, c) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..r)
        .map(|i| (0..c).map(|j| BigInt::from(m[(i, j)])).collect())
        .collect();
    // V as columns: v[j] is the j-th column
    let mut v: Vec<Vec<BigInt>> = if want_right {
        (0..c)
            .map(|j| {
                (0..c)
                    .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };

    let k = r.min(c);
    for t in 0..k {
        'pivot: loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break 'pivot;
            };
            a.swap(t, bi);
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                if want_right {
                    v.swap(t, bj);
                }
            }

            let mut clean = true;
            for i in t + 1..r {
                if !a[i][t].is_zero() {
                    let q = div_round(&a[i][t], &a[t][t]);
                    if !q.is_zero() {
                        for j in t..c {
                            let s = &a[t][j] * &q;
                            a[i][j] -= s;
                        }
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !a[t][j].is_zero() {
                    let q = div_round(&a[t][j], &a[t][t]);
                    if !q.is_zero() {
                        for i in 0..r {
                            let s = &a[i][t] * &q;
                            a[i][j] -= s;
                        }
                        if want_right {
                            for i in 0..c {
                                let s = &v[t][i] * &q;
                                v[j][i] -= s;
                            }
                        }
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }

            // divisibility of the trailing block by the pivot
            for i in t + 1..r {
                for j in t + 1..c {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        // fold row i into row t and restart this pivot
                        for jj in t..c {
                            let s = a[i][jj].clone();
                            a[t][jj] += s;
                        }
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }

    let mut d: Vec<BigInt> = (0..k).map(|i| a[i][i].abs()).collect();
    // push zeros to the back, keep the divisor chain
    d.sort_by(|x, y| match (x.is_zero(), y.is_zero()) {
        (true, true) => core::cmp::Ordering::Equal,
        (true, false) => core::cmp::Ordering::Greater,
        (false, true) => core::cmp::Ordering::Less,
        (false, false) => core::cmp::Ordering::Equal,
    });
    (d, if want_right { Some(v) } else { None })
}

/// Rounded division: the quotient minimizing `|a - q b|`.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
