//! Seeded random objects and exhaustive enumeration of small families.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Clutter, Ctx, Monomial, MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};

/// Deterministic source of random ideals, complexes and clutters.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform in `lo..=hi`.
    pub fn size(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// A context `x1..xn` with `n` uniform in `lo..=hi`.
    pub fn context(&mut self, lo: usize, hi: usize) -> Ctx {
        let n = self.size(lo, hi);
        VariableContext::indexed(n).expect("small context")
    }

    fn nonempty_subset(&mut self, ground: VertexSet) -> VertexSet {
        loop {
            let s = VertexSet(self.rng.gen::<u64>() & ground.0);
            if !s.is_empty() {
                return s;
            }
        }
    }

    /// A nonzero ideal from at most `max_gens` random monomials with
    /// exponents up to `max_exp`.
    pub fn ideal(&mut self, ctx: &Ctx, max_gens: usize, max_exp: u32) -> MonomialIdeal {
        let n = ctx.len();
        let count = self.size(1, max_gens.max(1));
        let mut gens = Vec::with_capacity(count);
        while gens.len() < count {
            let exps: Vec<u32> = (0..n).map(|_| self.rng.gen_range(0..=max_exp)).collect();
            if exps.iter().any(|&e| e > 0) {
                gens.push(Monomial::from_exponents(exps));
            }
        }
        MonomialIdeal::minimalize(ctx, gens).expect("no unit generator")
    }

    pub fn squarefree_ideal(&mut self, ctx: &Ctx, max_gens: usize) -> MonomialIdeal {
        let count = self.size(1, max_gens.max(1));
        let sets: Vec<VertexSet> = (0..count).map(|_| self.nonempty_subset(ctx.all())).collect();
        MonomialIdeal::from_sets(ctx, sets).expect("nonempty supports")
    }

    /// A nonvoid complex on ground `ctx.all()` generated by at most
    /// `max_faces` random faces. Small faces are favoured so that ghost
    /// vertices and low dimensions occur.
    pub fn complex(&mut self, ctx: &Ctx, max_faces: usize) -> SimplicialComplex {
        let ground = ctx.all();
        let count = self.size(1, max_faces.max(1));
        let faces = (0..count)
            .map(|_| {
                let a = VertexSet(self.rng.gen::<u64>() & ground.0);
                if self.rng.gen_bool(0.5) {
                    a.intersection(VertexSet(self.rng.gen::<u64>()))
                } else {
                    a
                }
            })
            .collect();
        SimplicialComplex::new(ctx, ground, faces).expect("faces inside ground")
    }

    /// A random nonempty face of a complex with at least one vertex.
    pub fn face(&mut self, complex: &SimplicialComplex) -> Option<VertexSet> {
        let facets: Vec<VertexSet> = complex.facets().iter().copied().filter(|f| !f.is_empty()).collect();
        let facet = *facets.choose(&mut self.rng)?;
        Some(self.nonempty_subset(facet))
    }

    /// An `r`-uniform clutter on all of `ctx` with up to `max_edges` edges.
    pub fn uniform_clutter(&mut self, ctx: &Ctx, r: usize, max_edges: usize) -> Clutter {
        let n = ctx.len();
        assert!(r >= 2 && r <= n, "edge size must lie in 2..=n");
        let count = self.size(1, max_edges.max(1));
        let mut all: Vec<usize> = (0..n).collect();
        let edges = (0..count)
            .map(|_| {
                all.shuffle(&mut self.rng);
                VertexSet::from_indices(all[..r].iter().copied())
            })
            .collect();
        Clutter::new(ctx, ctx.all(), edges).expect("uniform edges are incomparable")
    }
}

/// Every antichain of subsets of `ground` whose members have at least
/// `min_size` elements, each listed in increasing set order.
pub fn antichains(ground: VertexSet, min_size: usize) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_antichain(ground, min_size, |a| out.push(a.to_vec()));
    out
}

/// Calls `visit` on every antichain of subsets of `ground` with members of
/// size at least `min_size`, without collecting them.
pub fn for_each_antichain(ground: VertexSet, min_size: usize, mut visit: impl FnMut(&[VertexSet])) {
    let candidates: Vec<VertexSet> = ground.subsets().filter(|s| s.len() >= min_size).collect();
    let mut chosen = Vec::new();
    grow(&candidates, 0, &mut chosen, &mut visit);
}

fn grow(candidates: &[VertexSet], from: usize, chosen: &mut Vec<VertexSet>, visit: &mut impl FnMut(&[VertexSet])) {
    visit(chosen);
    for i in from..candidates.len() {
        let c = candidates[i];
        if chosen.iter().any(|s| s.is_subset(c) || c.is_subset(*s)) {
            continue;
        }
        chosen.push(c);
        grow(candidates, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// All clutters on vertex set `ctx.all()` (isolated vertices allowed).
pub fn all_clutters(ctx: &Ctx) -> Vec<Clutter> {
    antichains(ctx.all(), 2)
        .into_iter()
        .map(|edges| Clutter::new(ctx, ctx.all(), edges).expect("antichain of edges"))
        .collect()
}

/// All simple graphs on `ctx.all()` as clutters of 2-sets.
pub fn all_graphs(ctx: &Ctx) -> impl Iterator<Item = Clutter> + '_ {
    let n = ctx.len();
    let pairs: Vec<VertexSet> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| VertexSet::from_indices([a, b])))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        Clutter::new(ctx, ctx.all(), edges).expect("graph edges are incomparable")
    })
}

/// One complex per isomorphism class of complexes on ground `ctx.all()`,
/// the void complex included. The ground may hold ghost vertices.
pub fn complex_classes(ctx: &Ctx) -> Vec<SimplicialComplex> {
    let ground = ctx.all();
    let n = ctx.len();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for_each_antichain(ground, 0, |facets| {
        let profile = vertex_profiles(facets, n);
        // each class has a member whose vertex profiles do not increase
        if profile.windows(2).any(|w| w[0] < w[1]) {
            return;
        }
        if seen.insert(canonical_form(facets, &profile)) {
            let complex = if facets.is_empty() {
                SimplicialComplex::void(ctx, ground)
            } else {
                SimplicialComplex::new(ctx, ground, facets.to_vec()).expect("facets inside ground")
            };
            out.push(complex);
        }
    });
    out
}

fn vertex_profiles(facets: &[VertexSet], n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|v| {
            let mut sizes: Vec<usize> = facets.iter().filter(|f| f.contains(v)).map(|f| f.len()).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            sizes.insert(0, sizes.len());
            sizes
        })
        .collect()
}

/// Least sorted facet list over relabelings that only permute vertices
/// with equal profiles.
fn canonical_form(facets: &[VertexSet], profile: &[Vec<usize>]) -> Vec<u64> {
    let n = profile.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match blocks.last_mut() {
            Some(b) if profile[b[0]] == profile[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    permute_blocks(&blocks, 0, &mut perm, &mut |p| {
        let mut image: Vec<u64> = facets
            .iter()
            .map(|f| f.iter().fold(0u64, |acc, v| acc | 1 << p[v]))
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    });
    best.unwrap_or_default()
}

fn permute_blocks(blocks: &[Vec<usize>], at: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let Some(block) = blocks.get(at) else {
        visit(perm);
        return;
    };
    let mut targets = block.clone();
    heap_permutations(&mut targets, block.len(), &mut |t| {
        for (src, dst) in block.iter().zip(t) {
            perm[*src] = *dst;
        }
        permute_blocks(blocks, at + 1, perm, visit);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        items.swap(j, k - 1);
    }
    heap_permutations(items, k - 1, visit);
}
