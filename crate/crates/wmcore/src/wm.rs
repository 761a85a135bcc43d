//! Weighing matrices: verification, existence screens, row-intersection
//! invariants, induced and appended codes, and the direct-sum and
//! two-circulant constructions.

use alloc::format;
use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{IntMatrix, ModVector, MonomialTransform, RingTag};
use crate::codes::Code;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WmError {
    NotSquare { rows: usize, cols: usize },
    BadEntry { row: usize, col: usize, value: i64 },
    NotOrthogonal { row_a: usize, row_b: usize, dot: i64 },
    UnequalWeights { a: usize, b: usize },
    CirculantConditionFails,
    Parse(String),
}

impl fmt::Display for WmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WmError::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            WmError::BadEntry { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is not in {{0,1,-1}}")
            }
            WmError::NotOrthogonal { row_a, row_b, dot } => {
                write!(f, "rows {row_a} and {row_b} have inner product {dot}")
            }
            WmError::UnequalWeights { a, b } => {
                write!(f, "direct summands have weights {a} and {b}")
            }
            WmError::CirculantConditionFails => {
                write!(f, "A1 A1^T + A2 A2^T is not a scalar matrix")
            }
            WmError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

/// An `n x n` matrix over `{0, 1, -1}` with `W W^T = k I_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeighingMatrix {
    n: usize,
    k: usize,
    entries: Vec<i8>,
}

impl WeighingMatrix {
    /// Validates `W W^T = k I` exactly and returns the typed value.
    pub fn verify(n: usize, entries: Vec<i8>) -> Result<Self, WmError> {
        if n == 0 || entries.len() != n * n {
            return Err(WmError::NotSquare {
                rows: if n == 0 { 0 } else { entries.len() / n },
                cols: n,
            });
        }
        for (idx, &e) in entries.iter().enumerate() {
            if e != 0 && e != 1 && e != -1 {
                return Err(WmError::BadEntry {
                    row: idx / n,
                    col: idx % n,
                    value: e as i64,
                });
            }
        }
        let row = |i: usize| &entries[i * n..(i + 1) * n];
        let k = row(0).iter().map(|&e| (e as i64) * (e as i64)).sum::<i64>();
        for i in 0..n {
            for j in i..n {
                let dot: i64 = row(i)
                    .iter()
                    .zip(row(j))
                    .map(|(&a, &b)| a as i64 * b as i64)
                    .sum();
                let expect = if i == j { k } else { 0 };
                if dot != expect {
                    return Err(WmError::NotOrthogonal {
                        row_a: i,
                        row_b: j,
                        dot,
                    });
                }
            }
        }
        Ok(WeighingMatrix {
            n,
            k: k as usize,
            entries,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn transpose(&self) -> WeighingMatrix {
        let n = self.n;
        let mut e = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                e[j * n + i] = self.get(i, j);
            }
        }
        WeighingMatrix {
            n,
            k: self.k,
            entries: e,
        }
    }

    pub fn negated(&self) -> WeighingMatrix {
        WeighingMatrix {
            n: self.n,
            k: self.k,
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }

    /// `P W Q` for row transform `P` and column transform `Q`.
    pub fn transformed(&self, p: &MonomialTransform, q: &MonomialTransform) -> WeighingMatrix {
        let n = self.n;
        assert_eq!(p.degree(), n);
        assert_eq!(q.degree(), n);
        let mut e = vec![0i8; n * n];
        for i in 0..n {
            let ti = p.perm()[i] as usize;
            let si = p.signs()[i];
            for j in 0..n {
                let tj = q.perm()[j] as usize;
                let sj = q.signs()[j];
                e[ti * n + tj] = si * sj * self.get(i, j);
            }
        }
        WeighingMatrix {
            n,
            k: self.k,
            entries: e,
        }
    }

    /// Support of each row as a bitmask (orders up to 64).
    pub fn row_supports(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e != 0)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::new(
            self.n,
            self.n,
            self.entries.iter().map(|&e| e as i64).collect(),
        )
    }
}

/// Necessary-condition screen for the existence of a `W(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Screen {
    Possible,
    Impossible(String),
}

fn is_square(k: usize) -> bool {
    let r = (k as f64).sqrt() as usize;
    (r.saturating_sub(1)..=r + 1).any(|x| x * x == k)
}

fn is_sum_of_two_squares(k: usize) -> bool {
    let mut a = 0;
    while a * a <= k {
        if is_square(k - a * a) {
            return true;
        }
        a += 1;
    }
    false
}

pub fn existence_screen(n: usize, k: usize) -> Screen {
    if k == 0 || k > n {
        return Screen::Impossible(format!("weight {k} out of range for order {n}"));
    }
    if n <= 2 {
        return Screen::Possible;
    }
    if n % 2 == 1 {
        if !is_square(k) {
            return Screen::Impossible(format!("odd order requires a square weight, {k} is not"));
        }
        let d = n - k;
        if d * d + d + 1 < n {
            return Screen::Impossible(format!(
                "odd order requires (n-k)^2 + (n-k) + 1 >= n; {} < {n}",
                d * d + d + 1
            ));
        }
    } else if n % 4 == 2 {
        if !is_sum_of_two_squares(k) {
            return Screen::Impossible(format!(
                "order 2 mod 4 requires a sum of two squares, {k} is not"
            ));
        }
        if k > n - 1 {
            return Screen::Impossible(format!("order 2 mod 4 requires k <= n-1; {k} > {}", n - 1));
        }
    }
    Screen::Possible
}

/// Counts `x_0, x_2, ..., x_{2 floor(n/2)}` of rows meeting row `i` in
/// `0, 2, ...` places.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPattern {
    pub counts: Vec<usize>,
}

impl IntersectionPattern {
    /// The counts restricted to intersections `2, 4, ...` (drops `x_0`).
    pub fn nonzero_part(&self) -> &[usize] {
        &self.counts[1..]
    }
}

pub fn intersection_pattern(w: &WeighingMatrix, row: usize) -> IntersectionPattern {
    let supports = w.row_supports();
    let n = w.order();
    let mut counts = vec![0usize; n / 2 + 1];
    for j in 0..n {
        if j != row {
            let inter = (supports[row] & supports[j]).count_ones() as usize;
            debug_assert!(inter % 2 == 0, "row intersections are even");
            counts[inter / 2] += 1;
        }
    }
    IntersectionPattern { counts }
}

/// Maximum pairwise row intersection over the rows of `W` and of `W^T`.
pub fn intersection_number(w: &WeighingMatrix) -> usize {
    let mut best = 0;
    for m in [w.clone(), w.transpose()] {
        let supports = m.row_supports();
        for i in 0..m.order() {
            for j in i + 1..m.order() {
                best = best.max((supports[i] & supports[j]).count_ones() as usize);
            }
        }
    }
    best
}

/// Counts `N(i)` of unordered row triples sharing exactly `i` support columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GDistribution {
    pub counts: Vec<u64>,
}

pub fn g_distribution(w: &WeighingMatrix) -> GDistribution {
    let supports = w.row_supports();
    let n = w.order();
    let mut counts = vec![0u64; n + 1];
    for s in 0..n {
        for t in s + 1..n {
            let st = supports[s] & supports[t];
            for u in t + 1..n {
                counts[(st & supports[u]).count_ones() as usize] += 1;
            }
        }
    }
    GDistribution { counts }
}

/// `C_m(W)`: the `Z_m`-code generated by the rows of `W`.
pub fn induced_code(w: &WeighingMatrix, ring: RingTag) -> Code {
    let rows: Vec<ModVector> = (0..w.order())
        .map(|i| {
            ModVector::from_ints(ring, &w.row(i).iter().map(|&e| e as i64).collect::<Vec<_>>())
        })
        .collect();
    Code::new(ring, w.order(), &rows)
}

/// Number of weight-`target` codewords of `D_m(W)`, the code generated by
/// `(I_n | W)` over `Z_m`. Weight-bounded: only messages of Hamming weight
/// `<= target` are walked, since the identity block contributes the message
/// weight to every codeword.
pub fn appended_code_weight_count(w: &WeighingMatrix, ring: RingTag, target: usize) -> u64 {
    let n = w.order();
    let m = ring.modulus();
    // rows of W reduced mod m
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|i| w.row(i).iter().map(|&e| ring.reduce(e as i64)).collect())
        .collect();
    struct Dfs<'a> {
        n: usize,
        m: u32,
        target: usize,
        rows: &'a [Vec<u32>],
        right: Vec<u32>,
        count: u64,
    }
    impl Dfs<'_> {
        fn run(&mut self, next: usize, used: usize) {
            let right_wt = self.right.iter().filter(|&&e| e != 0).count();
            if used + right_wt == self.target {
                self.count += 1;
            }
            if used == self.target {
                return;
            }
            for pos in next..self.n {
                for val in 1..self.m {
                    for j in 0..self.n {
                        self.right[j] = (self.right[j] + val * self.rows[pos][j]) % self.m;
                    }
                    self.run(pos + 1, used + 1);
                    let back = self.m - val;
                    for j in 0..self.n {
                        self.right[j] = (self.right[j] + back * self.rows[pos][j]) % self.m;
                    }
                }
            }
        }
    }
    let mut dfs = Dfs {
        n,
        m,
        target,
        rows: &rows,
        right: vec![0; n],
        count: 0,
    };
    dfs.run(0, 0);
    dfs.count
}

/// Block-diagonal sum of two weighing matrices of the same weight.
pub fn direct_sum(a: &WeighingMatrix, b: &WeighingMatrix) -> Result<WeighingMatrix, WmError> {
    if a.weight() != b.weight() {
        return Err(WmError::UnequalWeights {
            a: a.weight(),
            b: b.weight(),
        });
    }
    let n = a.order() + b.order();
    let mut e = vec![0i8; n * n];
    for i in 0..a.order() {
        for j in 0..a.order() {
            e[i * n + j] = a.get(i, j);
        }
    }
    for i in 0..b.order() {
        for j in 0..b.order() {
            e[(a.order() + i) * n + (a.order() + j)] = b.get(i, j);
        }
    }
    WeighingMatrix::verify(n, e)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwoCirculantVariant {
    /// `[[A1, A2], [-A2^T, A1^T]]`
    W1,
    /// `[[A1, A2 R], [-A2 R, A1]]` with `R` the back-diagonal
    W2,
}

fn circulant(first_row: &[i8]) -> Vec<Vec<i8>> {
    let n = first_row.len();
    (0..n)
        .map(|i| (0..n).map(|j| first_row[(n + j - i) % n]).collect())
        .collect()
}

/// Builds an order-`2n` weighing matrix from two circulants with
/// `A1 A1^T + A2 A2^T = k I`.
pub fn two_circulant(
    a1: &[i8],
    a2: &[i8],
    variant: TwoCirculantVariant,
) -> Result<WeighingMatrix, WmError> {
    assert_eq!(a1.len(), a2.len());
    let n = a1.len();
    let c1 = circulant(a1);
    let c2 = circulant(a2);
    // A1 A1^T + A2 A2^T must be k I
    let k: i64 = a1.iter().chain(a2).map(|&e| (e as i64) * (e as i64)).sum();
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = (0..n)
                .map(|s| {
                    (c1[i][s] as i64) * (c1[j][s] as i64) + (c2[i][s] as i64) * (c2[j][s] as i64)
                })
                .sum();
            let expect = if i == j { k } else { 0 };
            if dot != expect {
                return Err(WmError::CirculantConditionFails);
            }
        }
    }
    let nn = 2 * n;
    let mut e = vec![0i8; nn * nn];
    match variant {
        TwoCirculantVariant::W1 => {
            for i in 0..n {
                for j in 0..n {
                    e[i * nn + j] = c1[i][j];
                    e[i * nn + n + j] = c2[i][j];
                    e[(n + i) * nn + j] = -c2[j][i];
                    e[(n + i) * nn + n + j] = c1[j][i];
                }
            }
        }
        TwoCirculantVariant::W2 => {
            // column-reversed A2
            for i in 0..n {
                for j in 0..n {
                    let a2r = c2[i][n - 1 - j];
                    e[i * nn + j] = c1[i][j];
                    e[i * nn + n + j] = a2r;
                    e[(n + i) * nn + j] = -a2r;
                    e[(n + i) * nn + n + j] = c1[i][j];
                }
            }
        }
    }
    WeighingMatrix::verify(nn, e)
}

/// Parses the weighing-matrix text format: `order <n>`, `weight <k>`, then
/// `n` rows of entries from `{0, 1, -1}`; `#` starts a comment; matrices are
/// separated by blank lines.
pub fn parse_wm_file(text: &str) -> Result<Vec<WeighingMatrix>, WmError> {
    let mut out = Vec::new();
    let mut lines = text
        .lines()
        .map(|l| match l.find('#') {
            Some(p) => &l[..p],
            None => l,
        })
        .map(str::trim)
        .peekable();
    while lines.peek().is_some() {
        while matches!(lines.peek(), Some(l) if l.is_empty()) {
            lines.next();
        }
        if lines.peek().is_none() {
            break;
        }
        let header = |line: Option<&str>, key: &str| -> Result<usize, WmError> {
            let line = line.ok_or_else(|| WmError::Parse(format!("missing `{key}` line")))?;
            let rest = line
                .strip_prefix(key)
                .ok_or_else(|| WmError::Parse(format!("expected `{key} <value>`, got `{line}`")))?;
            rest.trim()
                .parse::<usize>()
                .map_err(|_| WmError::Parse(format!("bad `{key}` value in `{line}`")))
        };
        let n = header(lines.next(), "order")?;
        let k = header(lines.next(), "weight")?;
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let row = loop {
                match lines.next() {
                    Some(l) if l.is_empty() => continue,
                    Some(l) => break l,
                    None => return Err(WmError::Parse("unexpected end of file".to_string())),
                }
            };
            for tok in row.split_whitespace() {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| WmError::Parse(format!("bad entry `{tok}`")))?;
                entries.push(v as i8);
            }
        }
        if entries.len() != n * n {
            return Err(WmError::Parse(format!(
                "expected {} entries, found {}",
                n * n,
                entries.len()
            )));
        }
        let w = WeighingMatrix::verify(n, entries)?;
        if w.weight() != k {
            return Err(WmError::Parse(format!(
                "declared weight {k} but matrix has weight {}",
                w.weight()
            )));
        }
        out.push(w);
    }
    Ok(out)
}

pub fn format_wm_file(ws: &[WeighingMatrix]) -> String {
    let mut s = String::new();
    for (idx, w) in ws.iter().enumerate() {
        if idx > 0 {
            s.push('\n');
        }
        s.push_str(&format!("order {}\nweight {}\n", w.order(), w.weight()));
        for i in 0..w.order() {
            let row: Vec<String> = w.row(i).iter().map(|e| format!("{e:2}")).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn load(name: &str) -> WeighingMatrix {
        let text = match name {
            "w12_5" => include_str!("../../../fixtures/w12_5.wm"),
            "w14_5" => include_str!("../../../fixtures/w14_5.wm"),
            "w12_6" => include_str!("../../../fixtures/w12_6.wm"),
            "w12_10" => include_str!("../../../fixtures/w12_10.wm"),
            "w14_8" => include_str!("../../../fixtures/w14_8.wm"),
            _ => panic!("unknown fixture {name}"),
        };
        parse_wm_file(text).unwrap().remove(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::elementary_divisors;
    use crate::codes::{dual, enumerate_wm_words, is_self_dual, is_self_orthogonal};
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn identity(n: usize) -> WeighingMatrix {
        let mut e = vec![0i8; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        WeighingMatrix::verify(n, e).unwrap()
    }

    #[test]
    fn identity_has_weight_one() {
        assert_eq!(identity(5).weight(), 1);
    }

    #[test]
    fn fixtures_verify_with_expected_weights() {
        for (name, n, k) in [
            ("w12_5", 12, 5),
            ("w14_5", 14, 5),
            ("w12_6", 12, 6),
            ("w12_10", 12, 10),
            ("w14_8", 14, 8),
        ] {
            let w = fixtures::load(name);
            assert_eq!((w.order(), w.weight()), (n, k), "{name}");
        }
    }

    #[test]
    fn sign_flip_breaks_verification() {
        let w = fixtures::load("w12_5");
        let mut e = w.entries().to_vec();
        let pos = e.iter().position(|&x| x != 0).unwrap();
        e[pos] = -e[pos];
        assert!(WeighingMatrix::verify(12, e).is_err());
    }

    #[test]
    fn bad_entry_rejected() {
        let mut e = vec![0i8; 4];
        e[0] = 2;
        assert!(matches!(
            WeighingMatrix::verify(2, e),
            Err(WmError::BadEntry { .. })
        ));
    }

    #[test]
    fn transpose_and_negation_verify() {
        for name in ["w12_5", "w12_6", "w12_10", "w14_8"] {
            let w = fixtures::load(name);
            assert_eq!(w.transpose().weight(), w.weight());
            assert_eq!(w.negated().weight(), w.weight());
        }
    }

    #[test]
    fn monomial_transforms_preserve_verification() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let w = fixtures::load("w12_6");
        for _ in 0..20 {
            let n = 12;
            let mut perm: Vec<u32> = (0..n as u32).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let signs: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
            let p = MonomialTransform::new(perm.clone(), signs.clone());
            let mut perm2: Vec<u32> = (0..n as u32).collect();
            for i in (1..n).rev() {
                perm2.swap(i, rng.gen_range(0..=i));
            }
            let signs2: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
            let q = MonomialTransform::new(perm2, signs2);
            let t = w.transformed(&p, &q);
            assert_eq!(t.weight(), 6);
            // invariants are preserved
            assert_eq!(g_distribution(&t), g_distribution(&w));
            assert_eq!(intersection_number(&t), intersection_number(&w));
        }
    }

    #[test]
    fn screens_match_the_stated_conditions() {
        assert!(matches!(existence_screen(5, 4), Screen::Impossible(_)));
        assert!(matches!(existence_screen(6, 3), Screen::Impossible(_)));
        assert_eq!(existence_screen(13, 9), Screen::Possible);
        assert!(matches!(existence_screen(13, 8), Screen::Impossible(_))); // not a square
        assert_eq!(existence_screen(14, 10), Screen::Possible); // 10 = 1 + 9
        assert!(matches!(existence_screen(14, 14), Screen::Impossible(_))); // k > n-1
        assert_eq!(existence_screen(2, 2), Screen::Possible);
        assert_eq!(existence_screen(12, 12), Screen::Possible);
        assert!(matches!(existence_screen(3, 4), Screen::Impossible(_))); // k > n
    }

    #[test]
    fn identity_intersections_are_zero() {
        let w = identity(6);
        assert_eq!(intersection_number(&w), 0);
        let p = intersection_pattern(&w, 0);
        assert_eq!(p.counts[0], 5);
        assert!(p.counts[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn w14_8_intersection_pattern() {
        let w = fixtures::load("w14_8");
        for m in [w.clone(), w.transpose()] {
            for row in 0..14 {
                let p = intersection_pattern(&m, row);
                // (x_2, x_4, x_6, x_8) = (0, 11, 2, 0)
                assert_eq!(&p.counts[1..=4], &[0, 11, 2, 0], "row {row}");
            }
        }
        assert_eq!(intersection_number(&w), 6);
    }

    #[test]
    fn g_distribution_of_identity3() {
        let d = g_distribution(&identity(3));
        assert_eq!(d.counts[0], 1);
        assert!(d.counts[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn g_distribution_of_w12_6_matches_published_row() {
        let w = fixtures::load("w12_6");
        let d = g_distribution(&w);
        assert_eq!(&d.counts, &[516, 360, 540, 120, 180, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(d.counts.iter().sum::<u64>(), 220); // C(12,3)
        // transpose spot check
        let dt = g_distribution(&w.transpose());
        assert_eq!(&dt.counts[..7], &[516, 360, 540, 120, 180, 0, 0]);
    }

    #[test]
    fn induced_codes_of_fixtures() {
        let f3 = RingTag::new(3).unwrap();
        let c = induced_code(&fixtures::load("w12_6"), f3);
        assert!(is_self_dual(&c));
        assert_eq!(c.dimension(), 6);
        let we = c.weight_enumerator();
        assert_eq!(we[6], 264, "G12 has 264 weight-6 words");
        assert!(we[1..6].iter().all(|&x| x == 0), "minimum weight 6");

        let f5 = RingTag::new(5).unwrap();
        let c10 = induced_code(&fixtures::load("w12_10"), f5);
        assert!(is_self_dual(&c10));

        let z4 = RingTag::new(4).unwrap();
        let c8 = induced_code(&fixtures::load("w14_8"), z4);
        assert!(is_self_orthogonal(&c8));
        assert_eq!(dual(&c8), c8, "8 = 4*2 with 2 odd: C_4(W) is self-dual");
    }

    #[test]
    fn wm_word_counts_in_g12() {
        let f3 = RingTag::new(3).unwrap();
        let g12 = induced_code(&fixtures::load("w12_6"), f3);
        let words = enumerate_wm_words(&g12, 6);
        assert_eq!(words.len(), 132); // 264 words in +- pairs
    }

    #[test]
    fn elementary_divisors_of_w12_6() {
        let w = fixtures::load("w12_6");
        let d = elementary_divisors(&w.to_int_matrix());
        let product: BigInt = d.iter().product();
        assert_eq!(product, BigInt::from(6u64.pow(6)));
        let by3 = d
            .iter()
            .filter(|x| (*x % BigInt::from(3)).is_zero())
            .count();
        assert_eq!(by3, 6);
    }

    #[test]
    fn divisor_product_is_k_pow_half_n_for_fixtures() {
        for name in ["w12_5", "w14_5", "w12_6", "w12_10", "w14_8"] {
            let w = fixtures::load(name);
            let d = elementary_divisors(&w.to_int_matrix());
            let product: BigInt = d.iter().product();
            let k = BigInt::from(w.weight());
            assert_eq!(product, k.pow(w.order() as u32 / 2), "{name}");
        }
    }

    #[test]
    fn direct_sum_of_identities() {
        let s = direct_sum(&identity(2), &identity(3)).unwrap();
        assert_eq!(s, identity(5));
        let w6 = fixtures::load("w12_6");
        assert!(matches!(
            direct_sum(&identity(2), &w6),
            Err(WmError::UnequalWeights { .. })
        ));
        let d = direct_sum(&w6, &w6).unwrap();
        assert_eq!((d.order(), d.weight()), (24, 6));
    }

    #[test]
    fn two_circulant_trivial_and_published_rows() {
        let w = two_circulant(&[1], &[0], TwoCirculantVariant::W1).unwrap();
        assert_eq!((w.order(), w.weight()), (2, 1));

        let a1 = [1, 0, 0, 0, 0, 0, 0];
        let a2 = [-1, 1, 1, 0, 1, 0, 0];
        let w1 = two_circulant(&a1, &a2, TwoCirculantVariant::W1).unwrap();
        assert_eq!((w1.order(), w1.weight()), (14, 5));
        let w2 = two_circulant(&a1, &a2, TwoCirculantVariant::W2).unwrap();
        assert_eq!((w2.order(), w2.weight()), (14, 5));

        assert!(two_circulant(&[1, 1, 0], &[1, 0, 0], TwoCirculantVariant::W1).is_err());
    }

    #[test]
    fn appended_weight_counts_sanity() {
        let z4 = RingTag::new(4).unwrap();
        let w = fixtures::load("w12_6");
        assert_eq!(appended_code_weight_count(&w, z4, 0), 1);
        // brute-force cross-check on a small case: D_3(I_3)
        let f3 = RingTag::new(3).unwrap();
        let i3 = identity(3);
        // (I | I): weights of (m | m): 2*wt(m): #weight-2 = number of weight-1
        // messages = 6
        assert_eq!(appended_code_weight_count(&i3, f3, 2), 6);
        assert_eq!(appended_code_weight_count(&i3, f3, 3), 0);
        assert_eq!(appended_code_weight_count(&i3, f3, 4), 12); // wt-2 messages: C(3,2)*4 = 12
    }

    #[test]
    fn parse_format_roundtrip() {
        let w = fixtures::load("w12_10");
        let text = format_wm_file(&[w.clone(), w.transpose()]);
        let back = parse_wm_file(&text).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0], w);
        assert_eq!(back[1], w.transpose());
        assert!(parse_wm_file("order 2\nweight 5\n1 1\n1 -1\n").is_err());
    }
}
