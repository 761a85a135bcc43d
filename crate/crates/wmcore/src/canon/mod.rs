//! Canonical labeling and automorphism groups of vertex-colored graphs.
//!
//! One canonizer serves the whole pipeline: code equivalence (through the
//! signed-support encoding of a code), incidence-structure equivalence, and
//! the automorphism groups acting on compatibility graphs. The algorithm is
//! individualization-refinement: refine to an equitable ordered partition,
//! branch on a target cell, and keep the leaf whose invariant record is
//! lexicographically greatest. Discovered automorphisms prune sibling
//! branches; path invariants prune subtrees that cannot beat the best leaf.

pub mod perm;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::MonomialTransform;
use crate::bits::BitSet;
use crate::codes::{Code, WeightCompositionWord};
use perm::{Perm, PermGroup, UnionFind};

/// A vertex-colored undirected graph without loops.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<u32>,
    adj: Vec<BitSet>,
}

impl ColoredGraph {
    pub fn new(colors: Vec<u32>) -> Self {
        let n = colors.len();
        ColoredGraph {
            n,
            colors,
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "no loops");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }

    /// The graph with vertex `i` renamed to `p(i)`.
    pub fn relabeled(&self, p: &Perm) -> ColoredGraph {
        let mut colors = vec![0u32; self.n];
        for v in 0..self.n {
            colors[p.apply(v)] = self.colors[v];
        }
        let mut g = ColoredGraph::new(colors);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    g.add_edge(p.apply(u), p.apply(v));
                }
            }
        }
        g
    }
}

/// An ordered partition of the vertices, nauty-style.
#[derive(Clone)]
struct Partition {
    /// position -> vertex
    lab: Vec<u32>,
    /// vertex -> position
    pos: Vec<u32>,
    /// glue[i] is true when positions i and i+1 share a cell
    glue: Vec<bool>,
    /// position -> start position of its cell
    start: Vec<u32>,
}

impl Partition {
    fn unit_from_colors(colors: &[u32]) -> Partition {
        let n = colors.len();
        let mut lab: Vec<u32> = (0..n as u32).collect();
        lab.sort_by_key(|&v| colors[v as usize]);
        let mut pos = vec![0u32; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let mut glue = vec![false; n];
        for i in 0..n.saturating_sub(1) {
            glue[i] = colors[lab[i] as usize] == colors[lab[i + 1] as usize];
        }
        let mut start = vec![0u32; n];
        let mut s = 0u32;
        for i in 0..n {
            start[i] = s;
            if i + 1 < n && !glue[i] {
                s = i as u32 + 1;
            }
        }
        Partition {
            lab,
            pos,
            glue,
            start,
        }
    }

    fn n(&self) -> usize {
        self.lab.len()
    }

    fn cell_bounds(&self, p: usize) -> (usize, usize) {
        let s = self.start[p] as usize;
        let mut e = p;
        while e < self.n() - 1 && self.glue[e] {
            e += 1;
        }
        (s, e + 1)
    }

    fn is_discrete(&self) -> bool {
        self.glue.iter().all(|&g| !g)
    }

    /// Starts of all cells, in partition order.
    fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.n() {
            out.push(i);
            let (_, e) = self.cell_bounds(i);
            i = e;
        }
        out
    }

    /// First smallest non-singleton cell, as (start, end).
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let (a, b) = self.cell_bounds(s);
            if b - a > 1 && best.map_or(true, |(x, y)| b - a < y - x) {
                best = Some((a, b));
            }
        }
        best
    }

    /// Splits cell `[s, e)` so that `order` becomes the member order and cell
    /// boundaries fall at `breaks` (positions relative to `s`, exclusive).
    fn apply_split(&mut self, s: usize, order: &[u32], breaks: &[usize]) {
        for (off, &v) in order.iter().enumerate() {
            self.lab[s + off] = v;
            self.pos[v as usize] = (s + off) as u32;
        }
        let mut cur_start = s;
        let mut bi = 0;
        for off in 0..order.len() {
            self.start[s + off] = cur_start as u32;
            let boundary_after = bi < breaks.len() && breaks[bi] == off + 1;
            if off + 1 < order.len() {
                self.glue[s + off] = !boundary_after;
            }
            if boundary_after {
                cur_start = s + off + 1;
                bi += 1;
            }
        }
    }
}

/// Equitable refinement; appends label-independent split events to `trace`.
fn refine(g: &ColoredGraph, part: &mut Partition, seeds: Vec<usize>, trace: &mut Vec<u32>) {
    let n = g.len();
    let mut queue: Vec<usize> = seeds;
    let mut qi = 0;
    while qi < queue.len() {
        let sp = queue[qi];
        qi += 1;
        // splitter = current cell at this start position
        let (ss, se) = part.cell_bounds(sp);
        if ss != sp {
            continue; // stale entry; the cell at sp no longer starts here
        }
        // union of neighborhoods of splitter members
        let mut nbrs = BitSet::new(n);
        for p in ss..se {
            let v = part.lab[p] as usize;
            for w in g.adj[v].iter() {
                nbrs.insert(w);
            }
        }
        let mut splitter_mask = BitSet::new(n);
        for p in ss..se {
            splitter_mask.insert(part.lab[p] as usize);
        }

        let starts = part.cell_starts();
        for cs in starts {
            let (a, b) = part.cell_bounds(cs);
            if b - a == 1 {
                continue;
            }
            if !(a..b).any(|p| nbrs.contains(part.lab[p] as usize)) {
                continue;
            }
            let mut keyed: Vec<(usize, u32)> = (a..b)
                .map(|p| {
                    let v = part.lab[p] as usize;
                    (g.adj[v].intersection_count(&splitter_mask), part.lab[p])
                })
                .collect();
            if keyed.iter().all(|&(d, _)| d == keyed[0].0) {
                continue;
            }
            // stable sort by degree keeps the (arbitrary) member order
            keyed.sort_by_key(|&(d, _)| d);
            let order: Vec<u32> = keyed.iter().map(|&(_, v)| v).collect();
            let mut breaks = Vec::new();
            trace.push(a as u32);
            let mut frag_sizes = Vec::new();
            let mut run = 1usize;
            for i in 1..keyed.len() {
                if keyed[i].0 != keyed[i - 1].0 {
                    breaks.push(i);
                    frag_sizes.push((keyed[i - 1].0 as u32, run as u32));
                    run = 1;
                } else {
                    run += 1;
                }
            }
            frag_sizes.push((keyed[keyed.len() - 1].0 as u32, run as u32));
            trace.push(frag_sizes.len() as u32);
            for (d, s) in frag_sizes {
                trace.push(d);
                trace.push(s);
            }
            part.apply_split(a, &order, &breaks);
            // all fragments become splitter candidates
            let mut fs = a;
            for &br in &breaks {
                queue.push(fs);
                fs = a + br;
            }
            queue.push(fs);
        }
    }
    // terminal summary of the partition shape
    trace.push(u32::MAX);
    for s in part.cell_starts() {
        let (a, b) = part.cell_bounds(s);
        trace.push((b - a) as u32);
    }
}

fn certificate_bytes(g: &ColoredGraph, lab: &[u32]) -> Vec<u8> {
    let n = g.len();
    let mut out = Vec::with_capacity(4 + 4 * n + n * n / 16 + 8);
    out.extend_from_slice(&(n as u32).to_le_bytes());
    for &v in lab {
        out.extend_from_slice(&g.colors[v as usize].to_le_bytes());
    }
    let mut bit = 0usize;
    let mut cur = 0u8;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(lab[i] as usize, lab[j] as usize) {
                cur |= 1 << (bit % 8);
            }
            bit += 1;
            if bit % 8 == 0 {
                out.push(cur);
                cur = 0;
            }
        }
    }
    if bit % 8 != 0 {
        out.push(cur);
    }
    out
}

struct LeafRec {
    traces: Vec<Vec<u32>>,
    lab: Vec<u32>,
    cert: Vec<u8>,
}

struct Searcher<'g> {
    g: &'g ColoredGraph,
    first: Option<LeafRec>,
    best: Option<LeafRec>,
    gens: Vec<Perm>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PathCmp {
    Better,
    Even,
    Worse,
}

impl<'g> Searcher<'g> {
    fn compare_traces(path: &[Vec<u32>], leaf: &LeafRec) -> PathCmp {
        for (i, t) in path.iter().enumerate() {
            match leaf.traces.get(i) {
                None => return PathCmp::Better,
                Some(b) => match t.cmp(b) {
                    core::cmp::Ordering::Less => return PathCmp::Worse,
                    core::cmp::Ordering::Greater => return PathCmp::Better,
                    core::cmp::Ordering::Equal => {}
                },
            }
        }
        PathCmp::Even
    }

    fn prefix_of_first(&self, path: &[Vec<u32>]) -> bool {
        match &self.first {
            None => true,
            Some(f) => {
                path.len() <= f.traces.len() && path.iter().zip(&f.traces).all(|(a, b)| a == b)
            }
        }
    }

    fn record_automorphism(&mut self, leaf_lab: &[u32], other: &LeafRec) {
        // other.lab[i] -> leaf_lab[i]
        let n = leaf_lab.len();
        let mut map = vec![0u32; n];
        for i in 0..n {
            map[other.lab[i] as usize] = leaf_lab[i];
        }
        let p = Perm::new(map);
        if !p.is_identity() {
            self.gens.push(p);
        }
    }

    fn node(&mut self, part: Partition, path: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if let Some(best) = &self.best {
            if Self::compare_traces(path, best) == PathCmp::Worse && !self.prefix_of_first(path) {
                return;
            }
        }
        let Some((a, b)) = part.target_cell() else {
            // discrete: a leaf
            let lab = part.lab.clone();
            let cert = certificate_bytes(self.g, &lab);
            if self.first.is_none() {
                let rec = LeafRec {
                    traces: path.clone(),
                    lab: lab.clone(),
                    cert: cert.clone(),
                };
                self.first = Some(LeafRec {
                    traces: path.clone(),
                    lab,
                    cert,
                });
                self.best = Some(rec);
                return;
            }
            let first = self.first.as_ref().unwrap();
            if cert == first.cert {
                let f = LeafRec {
                    traces: first.traces.clone(),
                    lab: first.lab.clone(),
                    cert: first.cert.clone(),
                };
                self.record_automorphism(&lab, &f);
            }
            let best = self.best.as_ref().unwrap();
            let cmp = Self::compare_traces(path, best);
            let best_cert = best.cert.clone();
            let best_lab = best.lab.clone();
            let best_traces = best.traces.clone();
            if cmp == PathCmp::Even && cert == best_cert && best_lab != lab {
                let b = LeafRec {
                    traces: best_traces,
                    lab: best_lab,
                    cert: best_cert.clone(),
                };
                self.record_automorphism(&lab, &b);
            }
            let better = match cmp {
                PathCmp::Better => true,
                PathCmp::Even => cert > best_cert,
                PathCmp::Worse => false,
            };
            if better {
                self.best = Some(LeafRec {
                    traces: path.clone(),
                    lab,
                    cert,
                });
            }
            return;
        };

        let children: Vec<u32> = part.lab[a..b].to_vec();
        let mut tried: Vec<u32> = Vec::new();
        let mut orbit_cache: Option<(usize, UnionFind)> = None;
        for v in children {
            if !tried.is_empty() {
                // rebuild orbits of the prefix-fixing subgroup when needed
                let need_rebuild = orbit_cache
                    .as_ref()
                    .map_or(true, |(ver, _)| *ver != self.gens.len());
                if need_rebuild {
                    let mut uf = UnionFind::new(self.g.len());
                    for gperm in &self.gens {
                        if prefix.iter().all(|&u| gperm.apply(u as usize) == u as usize) {
                            gperm.union_into(&mut uf);
                        }
                    }
                    orbit_cache = Some((self.gens.len(), uf));
                }
                let uf = &mut orbit_cache.as_mut().unwrap().1;
                let rv = uf.find(v as usize);
                if tried.iter().any(|&u| uf.find(u as usize) == rv) {
                    continue;
                }
            }
            let mut child = part.clone();
            // individualize v at the front of its cell
            let vp = child.pos[v as usize] as usize;
            let (ca, cb) = child.cell_bounds(vp);
            let mut order: Vec<u32> = Vec::with_capacity(cb - ca);
            order.push(v);
            order.extend(child.lab[ca..cb].iter().copied().filter(|&u| u != v));
            child.apply_split(ca, &order, &[1]);
            let mut tr = vec![a as u32, (b - a) as u32];
            refine(self.g, &mut child, vec![ca, ca + 1], &mut tr);
            path.push(tr);
            prefix.push(v);
            self.node(child, path, prefix);
            path.pop();
            prefix.pop();
            tried.push(v);
        }
    }
}

/// Everything the canonizer learns about a graph in one search.
pub struct GraphAnalysis {
    /// Bit-exact certificate: equal iff color-preserving isomorphic.
    pub certificate: Vec<u8>,
    /// Canonical labeling: position -> original vertex.
    pub canonical_labeling: Vec<u32>,
    /// Automorphism group of the colored graph.
    pub aut: PermGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonError {
    EmptyGraph,
    /// The weight layers cannot span the code.
    LayersCannotSpan,
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::EmptyGraph => write!(f, "empty graph"),
            CanonError::LayersCannotSpan => write!(f, "weight layers cannot span the code"),
        }
    }
}

/// Runs the full individualization-refinement search.
pub fn analyze(g: &ColoredGraph) -> GraphAnalysis {
    if g.len() == 0 {
        return GraphAnalysis {
            certificate: certificate_bytes(g, &[]),
            canonical_labeling: Vec::new(),
            aut: PermGroup::trivial(0),
        };
    }
    let mut part = Partition::unit_from_colors(g.colors());
    let mut trace = Vec::new();
    let seeds = part.cell_starts();
    refine(g, &mut part, seeds, &mut trace);
    let mut s = Searcher {
        g,
        first: None,
        best: None,
        gens: Vec::new(),
    };
    let mut path = vec![trace];
    let mut prefix = Vec::new();
    s.node(part, &mut path, &mut prefix);
    let best = s.best.expect("at least one leaf");
    GraphAnalysis {
        certificate: best.cert,
        canonical_labeling: best.lab,
        aut: PermGroup::from_generators(g.len(), &s.gens),
    }
}

/// Canonical certificate plus the canonical relabeling.
pub fn canonical_form(g: &ColoredGraph) -> (Vec<u8>, Vec<u32>) {
    let a = analyze(g);
    (a.certificate, a.canonical_labeling)
}

/// The full color-preserving automorphism group.
pub fn automorphism_group(g: &ColoredGraph) -> PermGroup {
    analyze(g).aut
}

/// Signed-support encoding of a code, the vehicle for code equivalence under
/// coordinate permutations and sign changes.
///
/// Vertices: `(j,+) = 2j`, `(j,-) = 2j+1` (color 0) with a matching edge per
/// coordinate; for each magnitude class `c >= 2` a pendant pair per signed
/// coordinate (color `c`); one vertex per codeword in the chosen weight
/// layers (color `m/2 + weight`), joined to the signed coordinates of its
/// support, with an edge between `x` and `-x`. Over `Z_4` the self-negating
/// residue 2 joins both signs of its coordinate.
pub struct CodeEncoding {
    pub graph: ColoredGraph,
    /// words in the layers, in vertex order starting at `word_base`
    pub words: Vec<crate::algebra::ModVector>,
    pub word_base: usize,
    pub coord_count: usize,
}

/// Encodes `c` using ascending weight layers until they span the code.
pub fn encode_code(c: &Code) -> Result<CodeEncoding, CanonError> {
    let ring = c.ring();
    let m = ring.modulus();
    let n = c.length();
    // gather words by weight
    let mut by_weight: BTreeMap<usize, Vec<crate::algebra::ModVector>> = BTreeMap::new();
    c.for_each_word(|w| {
        if !w.is_zero() {
            by_weight.entry(w.hamming_weight()).or_default().push(w.clone());
        }
    });
    let mut layer_words: Vec<crate::algebra::ModVector> = Vec::new();
    let mut spanned = false;
    for (_w, words) in &by_weight {
        layer_words.extend(words.iter().cloned());
        let span = Code::new(ring, n, &layer_words);
        if span == *c {
            spanned = true;
            break;
        }
    }
    if !spanned {
        return Err(CanonError::LayersCannotSpan);
    }
    layer_words.sort();

    // magnitude classes >= 2 present in the layers
    let mut mags: Vec<u32> = Vec::new();
    if !ring.is_z4() {
        for cmag in 2..=(m / 2) {
            if layer_words
                .iter()
                .any(|w| w.entries().iter().any(|&e| ring.magnitude(e) == cmag))
            {
                mags.push(cmag);
            }
        }
    }

    let coord_count = 2 * n;
    let mag_base = coord_count;
    let word_base = mag_base + 2 * n * mags.len();
    let total = word_base + layer_words.len();

    let mut colors = vec![0u32; total];
    for (mi, &cmag) in mags.iter().enumerate() {
        for idx in 0..2 * n {
            colors[mag_base + mi * 2 * n + idx] = cmag;
        }
    }
    for (wi, w) in layer_words.iter().enumerate() {
        colors[word_base + wi] = m / 2 + w.hamming_weight() as u32;
    }
    let mut g = ColoredGraph::new(colors);
    for j in 0..n {
        g.add_edge(2 * j, 2 * j + 1);
    }
    for (mi, _) in mags.iter().enumerate() {
        for idx in 0..2 * n {
            g.add_edge(mag_base + mi * 2 * n + idx, idx);
        }
    }
    let index_of: BTreeMap<&crate::algebra::ModVector, usize> = layer_words
        .iter()
        .enumerate()
        .map(|(i, w)| (w, word_base + i))
        .collect();
    for (wi, w) in layer_words.iter().enumerate() {
        let wv = word_base + wi;
        for j in 0..n {
            let e = w.get(j);
            if e == 0 {
                continue;
            }
            if ring.is_z4() && e == 2 {
                g.add_edge(wv, 2 * j);
                g.add_edge(wv, 2 * j + 1);
                continue;
            }
            let mag = ring.magnitude(e);
            let sign_neg = e != mag; // e == m - mag means the negative class
            let signed = 2 * j + usize::from(sign_neg);
            if mag == 1 {
                g.add_edge(wv, signed);
            } else {
                let mi = mags.iter().position(|&x| x == mag).unwrap();
                g.add_edge(wv, mag_base + mi * 2 * n + signed);
            }
        }
        let neg = w.negated();
        if neg != *w {
            let nv = index_of[&neg];
            if wv < nv {
                g.add_edge(wv, nv);
            }
        }
    }
    Ok(CodeEncoding {
        graph: g,
        words: layer_words,
        word_base,
        coord_count,
    })
}

/// Result of canonizing a code: certificate and the automorphism group as
/// monomial transforms (with its exact order).
pub struct CodeAnalysis {
    pub certificate: Vec<u8>,
    pub aut_generators: Vec<MonomialTransform>,
    /// Aut(C) as permutations of the 2n signed coordinates.
    pub aut_signed: PermGroup,
}

/// Certificate and automorphism group of a code under signed-permutation
/// equivalence. The restriction of the encoding's graph automorphisms to the
/// coordinate vertices is exactly Aut(C).
pub fn analyze_code(c: &Code) -> Result<CodeAnalysis, CanonError> {
    let enc = encode_code(c)?;
    let analysis = analyze(&enc.graph);
    let n = c.length();
    let mut mono = Vec::new();
    let mut signed_gens = Vec::new();
    for g in analysis.aut.generators() {
        let mut perm = vec![0u32; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let img = g.apply(2 * j);
            perm[j] = (img / 2) as u32;
            signs[j] = if img % 2 == 0 { 1 } else { -1 };
            debug_assert_eq!(g.apply(2 * j + 1), img ^ 1, "matching must be preserved");
        }
        signed_gens.push(Perm::new(
            (0..2 * n).map(|x| g.apply(x) as u32).collect(),
        ));
        mono.push(MonomialTransform::new(perm, signs));
    }
    Ok(CodeAnalysis {
        certificate: analysis.certificate,
        aut_generators: mono,
        aut_signed: PermGroup::from_generators(2 * n, &signed_gens),
    })
}
