//! Linear codes over `F_p` and `Z_4`: canonical generator matrices, duals,
//! self-orthogonality and maximality, codeword enumeration, coordinate
//! subtraction and coset weight profiles.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{
    apply_monomial, IntMatrix, ModVector, MonomialTransform, RingTag, snf_with_transform,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodesError {
    InvalidIndex { index: usize, length: usize },
    /// A sweep would exceed the configured guard.
    GuardExceeded { needed: u128, guard: u128 },
}

impl fmt::Display for CodesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodesError::InvalidIndex { index, length } => {
                write!(f, "coordinate {index} out of range for length {length}")
            }
            CodesError::GuardExceeded { needed, guard } => {
                write!(f, "sweep of size {needed} exceeds guard {guard}")
            }
        }
    }
}

/// A `Z_m`-submodule of `Z_m^n`, stored as a canonical generator matrix.
///
/// Over `F_p` the stored form is the reduced row echelon form; over `Z_4` it
/// is the Howell normal form (leading entries 1 or 2, entries above a unit
/// pivot zero, entries above a 2-pivot reduced mod 2, and the span closed
/// under leading-zero truncation). Both are unique for the row span, so
/// equality of codes is equality of the stored rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Code {
    ring: RingTag,
    length: usize,
    gens: Vec<ModVector>,
}

/// Pivot data for one stored generator row.
#[derive(Clone, Copy, Debug)]
struct Pivot {
    col: usize,
    /// true when the leading entry is a unit (normalised to 1)
    unit: bool,
}

impl Code {
    pub fn new(ring: RingTag, length: usize, generators: &[ModVector]) -> Self {
        for g in generators {
            assert_eq!(g.len(), length, "generator length mismatch");
            assert_eq!(g.ring(), ring, "generator ring mismatch");
        }
        let gens = canonical_form(ring, length, generators);
        Code { ring, length, gens }
    }

    pub fn zero(ring: RingTag, length: usize) -> Self {
        Code {
            ring,
            length,
            gens: Vec::new(),
        }
    }

    pub fn full_space(ring: RingTag, length: usize) -> Self {
        let gens = (0..length)
            .map(|i| {
                let mut v = ModVector::zero(ring, length);
                v.set(i, 1);
                v
            })
            .collect::<Vec<_>>();
        Code::new(ring, length, &gens)
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Canonical generator rows (echelon / Howell form).
    pub fn generators(&self) -> &[ModVector] {
        &self.gens
    }

    /// Number of stored generator rows.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// `|C|`.
    pub fn size(&self) -> u128 {
        let m = self.ring.modulus() as u128;
        self.gens
            .iter()
            .map(|g| {
                if self.ring.is_unit(g.get(leading_col(g).unwrap())) {
                    m
                } else {
                    2
                }
            })
            .product()
    }

    /// Dimension over `F_p`; panics over `Z_4` (use `size`).
    pub fn dimension(&self) -> usize {
        assert!(!self.ring.is_z4(), "dimension is an F_p notion");
        self.gens.len()
    }

    fn pivots(&self) -> Vec<Pivot> {
        self.gens
            .iter()
            .map(|g| {
                let col = leading_col(g).expect("stored rows are nonzero");
                Pivot {
                    col,
                    unit: self.ring.is_unit(g.get(col)),
                }
            })
            .collect()
    }

    /// Canonical coset representative of `x` modulo this code.
    pub fn reduce(&self, x: &ModVector) -> ModVector {
        let mut v = x.clone();
        let r = self.ring;
        for (g, p) in self.gens.iter().zip(self.pivots()) {
            let e = v.get(p.col);
            if p.unit {
                if e != 0 {
                    v.add_scaled(g, r.neg(e));
                }
            } else if e >= 2 {
                // 2-pivot: bring the entry into {0, 1}
                v.add_scaled(g, 3);
                debug_assert!(v.get(p.col) < 2);
            }
        }
        v
    }

    pub fn contains(&self, x: &ModVector) -> bool {
        self.reduce(x).is_zero()
    }

    /// Visits every codeword exactly once (mixed-radix message sweep).
    pub fn for_each_word<F: FnMut(&ModVector)>(&self, mut f: F) {
        let m = self.ring.modulus();
        let radices: Vec<u32> = self
            .gens
            .iter()
            .map(|g| {
                if self.ring.is_unit(g.get(leading_col(g).unwrap())) {
                    m
                } else {
                    2
                }
            })
            .collect();
        let mut digits = vec![0u32; radices.len()];
        let mut word = ModVector::zero(self.ring, self.length);
        loop {
            f(&word);
            // odometer increment, updating the word incrementally
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return;
                }
                digits[i] += 1;
                if digits[i] < radices[i] {
                    word.add_scaled(&self.gens[i], 1);
                    break;
                }
                digits[i] = 0;
                // rolling over subtracts (radix-1) copies
                let back = self.ring.neg((radices[i] - 1) % m);
                word.add_scaled(&self.gens[i], back);
                i += 1;
            }
        }
    }

    /// All codewords; prefer `for_each_word` for large codes.
    pub fn words(&self) -> Vec<ModVector> {
        let mut out = Vec::new();
        self.for_each_word(|w| out.push(w.clone()));
        out
    }

    /// Hamming weight enumerator: counts indexed by weight `0..=n`.
    pub fn weight_enumerator(&self) -> Vec<u64> {
        let mut acc = vec![0u64; self.length + 1];
        self.for_each_word(|w| acc[w.hamming_weight()] += 1);
        acc
    }
}

fn leading_col(v: &ModVector) -> Option<usize> {
    v.entries().iter().position(|&e| e != 0)
}

/// Reduced row echelon form over `F_p`, Howell normal form over `Z_4`.
/// Unique for the row span; idempotent.
pub fn canonical_form(ring: RingTag, length: usize, rows: &[ModVector]) -> Vec<ModVector> {
    let mut by_col: BTreeMap<usize, ModVector> = BTreeMap::new();
    let mut queue: Vec<ModVector> = rows.to_vec();

    while let Some(mut v) = queue.pop() {
        loop {
            let Some(c) = leading_col(&v) else {
                break;
            };
            match by_col.get(&c) {
                Some(p) => {
                    let lead_p = p.get(c);
                    if ring.is_unit(lead_p) {
                        // lead_p is normalised to 1
                        let coef = ring.neg(v.get(c));
                        let p = p.clone();
                        v.add_scaled(&p, coef);
                    } else if ring.is_unit(v.get(c)) {
                        // unit beats the stored 2-pivot: swap them
                        let inv = ring.inv(v.get(c));
                        let newp = v.scaled(inv);
                        let old = by_col.insert(c, newp.clone()).expect("pivot present");
                        queue.push(newp.scaled(2));
                        v = old;
                    } else {
                        // both lead with 2
                        let p = p.clone();
                        v.add_scaled(&p, 3);
                    }
                }
                None => {
                    let lead = v.get(c);
                    if ring.is_unit(lead) {
                        let inv = ring.inv(lead);
                        let newp = v.scaled(inv);
                        if ring.is_z4() {
                            queue.push(newp.scaled(2));
                        }
                        by_col.insert(c, newp);
                    } else {
                        debug_assert!(ring.is_z4() && lead == 2);
                        // Howell closure: 2*v has a later leading column
                        queue.push(v.scaled(2));
                        by_col.insert(c, v);
                    }
                    break;
                }
            }
        }
    }

    // reduce entries above every pivot, left to right
    let cols: Vec<usize> = by_col.keys().copied().collect();
    for &c in &cols {
        let p = by_col[&c].clone();
        let unit = ring.is_unit(p.get(c));
        for &c2 in &cols {
            if c2 == c {
                continue;
            }
            let q = by_col.get_mut(&c2).unwrap();
            let e = q.get(c);
            if unit {
                if e != 0 {
                    q.add_scaled(&p, ring.neg(e));
                }
            } else if e >= 2 {
                q.add_scaled(&p, 3);
                debug_assert!(q.get(c) < 2);
            }
        }
    }

    debug_assert!(by_col.values().all(|v| v.len() == length));
    by_col.into_values().collect()
}

/// The dual code under the standard inner product.
pub fn dual(c: &Code) -> Code {
    let ring = c.ring();
    let n = c.length();
    if c.num_generators() == 0 {
        return Code::full_space(ring, n);
    }
    if !ring.is_z4() {
        // RREF nullspace
        let gens = c.generators();
        let pivots: Vec<usize> = gens.iter().map(|g| leading_col(g).unwrap()).collect();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut out = Vec::new();
        for f in 0..n {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = ModVector::zero(ring, n);
            v.set(f, 1);
            for (g, &p) in gens.iter().zip(&pivots) {
                v.set(p, ring.neg(g.get(f)));
            }
            out.push(v);
        }
        return Code::new(ring, n, &out);
    }
    // Z_4: kernel via the integer Smith normal form of the generator matrix.
    // With U*G*V = diag(d), x lies in the kernel mod 4 iff coordinate i of
    // V^-1 x is a multiple of 4/gcd(d_i, 4); generators are the columns of V
    // scaled accordingly.
    let k = c.num_generators();
    let mut data = Vec::with_capacity(k * n);
    for g in c.generators() {
        data.extend(g.entries().iter().map(|&e| e as i64));
    }
    let (d, v) = snf_with_transform(&IntMatrix::new(k, n, data), true);
    let v = v.unwrap();
    let mut out = Vec::new();
    for i in 0..n {
        let di: u128 = if i < d.len() {
            use num_traits::ToPrimitive;
            d[i].to_u128().unwrap_or(0)
        } else {
            0
        };
        let g = if di == 0 { 4 } else { gcd_u128(di, 4) };
        let scale = (4 / g) as u32;
        if scale == 4 {
            continue; // unit divisor, no freedom in this coordinate
        }
        let four = num_bigint::BigInt::from(4);
        let col: Vec<u32> = v[i]
            .iter()
            .map(|b| {
                use num_integer::Integer;
                use num_traits::ToPrimitive;
                let r = b.mod_floor(&four).to_u32().unwrap();
                ring.mul(scale, r)
            })
            .collect();
        out.push(ModVector::new(ring, col));
    }
    Code::new(ring, n, &out)
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if a == 0 {
        b
    } else {
        gcd_u128(b % a, a)
    }
}

pub fn is_self_orthogonal(c: &Code) -> bool {
    let gens = c.generators();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            if a.dot(b) != 0 {
                return false;
            }
        }
    }
    true
}

pub fn is_self_dual(c: &Code) -> bool {
    if !is_self_orthogonal(c) {
        return false;
    }
    let m = c.ring().modulus() as u128;
    let size = c.size();
    size * size == m.pow(c.length() as u32)
}

/// Expected `F_p` dimension of a maximal self-orthogonal code, when defined.
pub fn mso_dimension(ring: RingTag, n: usize) -> Option<usize> {
    if ring.is_z4() {
        return None;
    }
    let p = ring.modulus();
    if n % 2 == 1 {
        return Some((n - 1) / 2);
    }
    if p % 4 == 1 || n % 4 == 0 {
        Some(n / 2)
    } else {
        Some(n / 2 - 1)
    }
}

/// Is `C` contained in no strictly larger self-orthogonal code?
///
/// Over `Z_4` maximality is equivalent to self-duality. Over `F_p` the cosets
/// of `C` in its dual are swept for an isotropic representative (`x . x` is
/// constant on each coset).
pub fn is_maximal_so(c: &Code) -> bool {
    if !is_self_orthogonal(c) {
        return false;
    }
    if c.ring().is_z4() {
        return is_self_dual(c);
    }
    let d = dual(c);
    let p = c.ring().modulus() as u128;
    let r = d.dimension() - c.dimension();
    assert!(
        p.pow(r as u32) <= 20_000_000,
        "maximality sweep of size {}^{} too large",
        p,
        r
    );
    let comp = complement_basis(c, &d);
    debug_assert_eq!(comp.len(), r);
    let mut maximal = true;
    for_each_combination(c.ring(), &comp, |y| {
        if !y.is_zero() && y.dot(y) == 0 {
            maximal = false;
        }
    });
    if maximal {
        debug_assert_eq!(Some(c.dimension()), mso_dimension(c.ring(), c.length()));
    }
    maximal
}

/// Rows of `big` that extend `small` to a basis of `big`: the combinations of
/// these rows form a transversal of the cosets of `small` in `big`.
pub fn complement_basis(small: &Code, big: &Code) -> Vec<ModVector> {
    let ring = small.ring();
    let size_of = |rows: &[ModVector]| -> u128 {
        rows.iter()
            .map(|r| {
                if ring.is_unit(r.get(leading_col(r).unwrap())) {
                    ring.modulus() as u128
                } else {
                    2
                }
            })
            .product()
    };
    let mut acc: Vec<ModVector> = small.generators().to_vec();
    let mut cur = size_of(&canonical_form(ring, small.length(), &acc));
    let mut out = Vec::new();
    for g in big.generators() {
        acc.push(g.clone());
        let next = size_of(&canonical_form(ring, small.length(), &acc));
        if next > cur {
            out.push(g.clone());
            cur = next;
        } else {
            acc.pop();
        }
    }
    out
}

/// Visits all `Z_m`-combinations of `basis` (including zero). Over `Z_4`,
/// torsion rows (leading entry 2) only take coefficients 0 and 1.
pub fn for_each_combination<F: FnMut(&ModVector)>(ring: RingTag, basis: &[ModVector], mut f: F) {
    let Some(first) = basis.first() else {
        return;
    };
    let m = ring.modulus();
    let radices: Vec<u32> = basis
        .iter()
        .map(|b| {
            if ring.is_z4() && !ring.is_unit(b.get(leading_col(b).unwrap_or(0))) {
                2
            } else {
                m
            }
        })
        .collect();
    let mut digits = vec![0u32; basis.len()];
    let mut cur = ModVector::zero(ring, first.len());
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == digits.len() {
                return;
            }
            digits[i] += 1;
            if digits[i] < radices[i] {
                cur.add_scaled(&basis[i], 1);
                break;
            }
            digits[i] = 0;
            cur.add_scaled(&basis[i], ring.neg((radices[i] - 1) % m));
            i += 1;
        }
    }
}

/// A codeword together with its residue composition `n_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCompositionWord {
    pub word: ModVector,
    /// `counts[i]` = number of entries equal to `i`.
    pub counts: Vec<usize>,
}

impl WeightCompositionWord {
    pub fn new(word: ModVector) -> Self {
        let m = word.ring().modulus() as usize;
        let mut counts = vec![0usize; m];
        for &e in word.entries() {
            counts[e as usize] += 1;
        }
        WeightCompositionWord { word, counts }
    }
}

/// All codewords with exactly `k` nonzero entries, all lying in `{1, m-1}`,
/// grouped into `{x, -x}` pairs; one representative per pair, the
/// lexicographically smaller. Over `Z_4`, words containing the residue 2 are
/// excluded by the entry constraint.
pub fn enumerate_wm_words(c: &Code, k: usize) -> Vec<WeightCompositionWord> {
    assert!(k <= c.length());
    let m = c.ring().modulus();
    let mut reps: BTreeSet<ModVector> = BTreeSet::new();
    c.for_each_word(|w| {
        let mut nonzero = 0usize;
        let mut ok = true;
        for &e in w.entries() {
            if e != 0 {
                nonzero += 1;
                if e != 1 && e != m - 1 {
                    ok = false;
                    break;
                }
            }
        }
        if ok && nonzero == k {
            let neg = w.negated();
            reps.insert(if *w <= neg { w.clone() } else { neg });
        }
    });
    reps.into_iter().map(WeightCompositionWord::new).collect()
}

/// The length `n-1` code of words vanishing at `coord`, with `coord` deleted.
pub fn subtract(c: &Code, coord: usize) -> Result<Code, CodesError> {
    let n = c.length();
    if coord >= n {
        return Err(CodesError::InvalidIndex {
            index: coord,
            length: n,
        });
    }
    let ring = c.ring();
    // move coord to the front; the echelon property then isolates the subcode
    let rotate = |v: &ModVector| -> ModVector {
        let mut e = Vec::with_capacity(n);
        e.push(v.get(coord));
        e.extend(
            v.entries()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != coord)
                .map(|(_, &x)| x),
        );
        ModVector::new(ring, e)
    };
    let rotated: Vec<ModVector> = c.generators().iter().map(rotate).collect();
    let form = canonical_form(ring, n, &rotated);
    let mut out = Vec::new();
    for row in &form {
        if row.get(0) == 0 {
            out.push(ModVector::new(ring, row.entries()[1..].to_vec()));
        }
    }
    Ok(Code::new(ring, n - 1, &out))
}

/// Which ambient space the coset weight profile ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CosetAmbient {
    /// Cosets of `C` in `C^perp` (default reading).
    Dual,
    /// Cosets of `C` in the full space `Z_m^n`.
    FullSpace,
}

/// Coset weight numbers `B_j`: the number of cosets whose minimum Hamming
/// weight is `j`. `sum_j B_j` equals the number of cosets.
pub fn coset_weight_profile(
    c: &Code,
    ambient: CosetAmbient,
    guard: u128,
) -> Result<Vec<u64>, CodesError> {
    let big = match ambient {
        CosetAmbient::Dual => dual(c),
        CosetAmbient::FullSpace => Code::full_space(c.ring(), c.length()),
    };
    let elements = big.size();
    if elements > guard {
        return Err(CodesError::GuardExceeded {
            needed: elements,
            guard,
        });
    }
    let mut min_weight: BTreeMap<ModVector, usize> = BTreeMap::new();
    big.for_each_word(|w| {
        let rep = c.reduce(w);
        let wt = w.hamming_weight();
        min_weight
            .entry(rep)
            .and_modify(|cur| *cur = (*cur).min(wt))
            .or_insert(wt);
    });
    let mut profile = vec![0u64; c.length() + 1];
    for (_, wt) in min_weight {
        profile[wt] += 1;
    }
    Ok(profile)
}

/// The image code `C P` for a monomial transform `P`.
pub fn monomial_image(c: &Code, t: &MonomialTransform) -> Code {
    let gens: Vec<ModVector> = c
        .generators()
        .iter()
        .map(|g| apply_monomial(g, t).expect("degree matches length"))
        .collect();
    Code::new(c.ring(), c.length(), &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rank_mod;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> RingTag {
        RingTag::new(3).unwrap()
    }

    fn z4() -> RingTag {
        RingTag::new(4).unwrap()
    }

    fn v(ring: RingTag, e: &[u32]) -> ModVector {
        ModVector::new(ring, e.to_vec())
    }

    fn random_vec(rng: &mut ChaCha8Rng, ring: RingTag, n: usize) -> ModVector {
        ModVector::new(ring, (0..n).map(|_| rng.gen_range(0..ring.modulus())).collect())
    }

    #[test]
    fn echelon_is_idempotent_and_span_preserving_f3() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..40 {
            let n = 6;
            let rows: Vec<ModVector> = (0..3).map(|_| random_vec(&mut rng, f3(), n)).collect();
            let c = Code::new(f3(), n, &rows);
            let again = Code::new(f3(), n, c.generators());
            assert_eq!(c, again);
            for r in &rows {
                assert!(c.contains(r));
            }
            for _ in 0..10 {
                let mut x = ModVector::zero(f3(), n);
                for r in &rows {
                    x.add_scaled(r, rng.gen_range(0..3));
                }
                assert!(c.contains(&x));
            }
        }
    }

    #[test]
    fn howell_form_is_generator_independent_z4() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..60 {
            let n = 5;
            let rows: Vec<ModVector> = (0..3).map(|_| random_vec(&mut rng, z4(), n)).collect();
            let c = Code::new(z4(), n, &rows);
            // a second generating set: random recombinations plus a rescaling
            let mut alt: Vec<ModVector> = rows.clone();
            for _ in 0..6 {
                let i = rng.gen_range(0..alt.len());
                let j = rng.gen_range(0..alt.len());
                if i != j {
                    let w = alt[j].clone();
                    alt[i].add_scaled(&w, rng.gen_range(0..4));
                }
            }
            let last = alt[rng.gen_range(0..alt.len())].scaled(3);
            alt.push(last);
            let c2 = Code::new(z4(), n, &alt);
            // recombination i += c*j can shrink the span; only compare when equal
            let all_in = rows.iter().all(|r| c2.contains(r));
            if all_in {
                assert_eq!(c, c2, "same span must give the same Howell form");
            }
        }
    }

    #[test]
    fn z4_size_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = 4;
            let rows: Vec<ModVector> = (0..2).map(|_| random_vec(&mut rng, z4(), n)).collect();
            let c = Code::new(z4(), n, &rows);
            let mut set = BTreeSet::new();
            for a in 0..4u32 {
                for b in 0..4u32 {
                    let mut x = rows[0].scaled(a);
                    x.add_scaled(&rows[1], b);
                    set.insert(x);
                }
            }
            assert_eq!(c.size(), set.len() as u128, "code {:?}", rows);
            let mut count = 0u128;
            c.for_each_word(|w| {
                assert!(set.contains(w));
                count += 1;
            });
            assert_eq!(count, c.size());
        }
    }

    #[test]
    fn rank_agrees_with_code_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..30 {
            let n = 5;
            let rows: Vec<ModVector> = (0..3).map(|_| random_vec(&mut rng, z4(), n)).collect();
            let c = Code::new(z4(), n, &rows);
            let r = rank_mod(z4(), &rows);
            assert_eq!(c.size(), r.span_size(z4()));
        }
    }

    #[test]
    fn dual_of_zero_code_is_full_space() {
        let c = Code::zero(f3(), 4);
        let d = dual(&c);
        assert_eq!(d.size(), 81);
    }

    #[test]
    fn dual_dimensions_and_involution_f3() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = 6;
            let k = rng.gen_range(1..4);
            let rows: Vec<ModVector> = (0..k).map(|_| random_vec(&mut rng, f3(), n)).collect();
            let c = Code::new(f3(), n, &rows);
            let d = dual(&c);
            assert_eq!(c.size() * d.size(), 3u128.pow(6));
            assert_eq!(dual(&d), c);
            for a in c.generators() {
                for b in d.generators() {
                    assert_eq!(a.dot(b), 0);
                }
            }
        }
    }

    #[test]
    fn dual_involution_z4() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..60 {
            let n = 5;
            let k = rng.gen_range(1..4);
            let rows: Vec<ModVector> = (0..k).map(|_| random_vec(&mut rng, z4(), n)).collect();
            let c = Code::new(z4(), n, &rows);
            let d = dual(&c);
            assert_eq!(
                c.size() * d.size(),
                4u128.pow(5),
                "|C| |C^perp| = 4^n failed for {:?}",
                c
            );
            for a in c.generators() {
                for b in d.generators() {
                    assert_eq!(a.dot(b), 0, "C={:?} D={:?}", c, d);
                }
            }
            assert_eq!(dual(&d), c);
        }
    }

    #[test]
    fn span_111_over_f3() {
        let c = Code::new(f3(), 3, &[v(f3(), &[1, 1, 1])]);
        let d = dual(&c);
        assert_eq!(d.dimension(), 2);
        assert!(d.contains(&v(f3(), &[1, 1, 1])));
        assert!(is_self_orthogonal(&c));
        assert!(is_maximal_so(&c));
        assert_eq!(mso_dimension(f3(), 3), Some(1));
    }

    #[test]
    fn non_self_orthogonal_example_over_f5() {
        let f5 = RingTag::new(5).unwrap();
        let c = Code::new(f5, 4, &[v(f5, &[1, 1, 0, 0])]);
        assert!(!is_self_orthogonal(&c));
    }

    #[test]
    fn wm_words_of_zero_code_is_empty() {
        let c = Code::zero(f3(), 6);
        assert!(enumerate_wm_words(&c, 3).is_empty());
    }

    #[test]
    fn wm_words_pair_reps_and_entry_filter() {
        // span{(1,1,1,0),(0,0,0,2)} over Z4: words holding a 2 are excluded
        let c = Code::new(z4(), 4, &[v(z4(), &[1, 1, 1, 0]), v(z4(), &[0, 0, 0, 2])]);
        let words = enumerate_wm_words(&c, 3);
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].word.entries(), &[1, 1, 1, 0]);
        assert_eq!(words[0].counts[0], 1);
        assert_eq!(words[0].counts[1], 3);
    }

    #[test]
    fn subtract_length4_ternary_self_dual() {
        // the unique ternary self-dual code of length 4
        let c = Code::new(f3(), 4, &[v(f3(), &[1, 1, 1, 0]), v(f3(), &[0, 1, 2, 1])]);
        assert!(is_self_dual(&c));
        for coord in 0..4 {
            let s = subtract(&c, coord).unwrap();
            assert_eq!(s.length(), 3);
            assert!(is_self_orthogonal(&s));
            assert_eq!(s.dimension(), 1);
            assert!(is_maximal_so(&s));
        }
        assert!(subtract(&c, 4).is_err());
    }

    #[test]
    fn subtract_matches_brute_force_z4() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..30 {
            let n = 5;
            let rows: Vec<ModVector> = (0..2).map(|_| random_vec(&mut rng, z4(), n)).collect();
            let c = Code::new(z4(), n, &rows);
            let coord = rng.gen_range(0..n);
            let s = subtract(&c, coord).unwrap();
            let mut expect = BTreeSet::new();
            c.for_each_word(|w| {
                if w.get(coord) == 0 {
                    let e: Vec<u32> = w
                        .entries()
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != coord)
                        .map(|(_, &x)| x)
                        .collect();
                    expect.insert(ModVector::new(z4(), e));
                }
            });
            let mut got = BTreeSet::new();
            s.for_each_word(|w| {
                got.insert(w.clone());
            });
            assert_eq!(expect, got);
        }
    }

    #[test]
    fn coset_profile_of_full_space() {
        let c = Code::full_space(f3(), 4);
        let p = coset_weight_profile(&c, CosetAmbient::Dual, 1 << 20).unwrap();
        assert_eq!(p[0], 1);
        assert!(p[1..].iter().all(|&x| x == 0));
    }

    #[test]
    fn coset_profile_counts_cosets() {
        let c = Code::new(f3(), 4, &[v(f3(), &[1, 1, 1, 0]), v(f3(), &[0, 1, 2, 1])]);
        let p = coset_weight_profile(&c, CosetAmbient::FullSpace, 1 << 20).unwrap();
        assert_eq!(p.iter().sum::<u64>(), 9);
        assert_eq!(p[0], 1);
        let pd = coset_weight_profile(&c, CosetAmbient::Dual, 1 << 20).unwrap();
        assert_eq!(pd.iter().sum::<u64>(), 1); // self-dual: a single coset
        assert_eq!(pd[0], 1);
    }

    #[test]
    fn monomial_image_preserves_self_duality() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let c = Code::new(f3(), 4, &[v(f3(), &[1, 1, 1, 0]), v(f3(), &[0, 1, 2, 1])]);
        for _ in 0..30 {
            let mut perm: Vec<u32> = (0..4).collect();
            for i in (1..4usize).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let signs = (0..4).map(|_| if rng.gen() { 1 } else { -1 }).collect();
            let t = MonomialTransform::new(perm, signs);
            let img = monomial_image(&c, &t);
            assert!(is_self_dual(&img));
        }
        // identity and global negation fix any linear code
        assert_eq!(monomial_image(&c, &MonomialTransform::identity(4)), c);
        let neg = MonomialTransform::new(vec![0, 1, 2, 3], vec![-1; 4]);
        assert_eq!(monomial_image(&c, &neg), c);
    }

    #[test]
    fn howell_closure_example() {
        // span{(2,1)} over Z4 = {(0,0),(2,1),(0,2),(2,3)}: Howell form needs (0,2)
        let c = Code::new(z4(), 2, &[v(z4(), &[2, 1])]);
        assert_eq!(c.size(), 4);
        assert_eq!(c.num_generators(), 2);
        assert!(c.contains(&v(z4(), &[0, 2])));
        assert!(c.contains(&v(z4(), &[2, 3])));
        assert!(!c.contains(&v(z4(), &[2, 0])));
    }
}
