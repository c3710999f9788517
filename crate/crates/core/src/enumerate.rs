//! Small posets, exhaustively up to isomorphism or at random.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::finspace::{FinPoset, PointMap, Subset};
use crate::prospace::{ProSpace, Rule, Sections, DEFAULT_DEPTH};

/// Identifier for the `i`-th generated element: `a`, `b`, ... then `x26`, ...
pub fn element_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("x{i}")
    }
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(element_name).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest relation matrix encoding over all relabellings.
fn canonical_form(p: &FinPoset, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = p.len();
    perms
        .iter()
        .map(|perm| {
            let mut code = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    code.push(p.leq(perm[a], perm[b]));
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

/// All posets on `n` points, one per isomorphism class.
///
/// Every finite poset has a linear extension, so only relations contained in
/// the index order need to be generated. Practical up to `n = 6`.
pub fn posets_up_to_iso(n: usize) -> Vec<FinPoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() < 32, "too many points for exhaustive enumeration");
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let p = FinPoset::from_relation(names(n), &chosen).expect("index order is acyclic");
        // Skip relations whose transitive closure adds pairs: they reappear
        // with the closure itself as the chosen mask.
        let strict_pairs: usize = (0..n).map(|a| p.up(a).len() - 1).sum();
        if strict_pairs != chosen.len() {
            continue;
        }
        if seen.insert(canonical_form(&p, &perms)) {
            out.push(p);
        }
    }
    out
}

/// All posets on at most `max` points, up to isomorphism, smallest first.
pub fn posets_up_to(max: usize) -> Vec<FinPoset> {
    (0..=max).flat_map(posets_up_to_iso).collect()
}

/// Random poset on `n` points; each pair of a hidden linear order is related
/// with probability `density` before the transitive closure is taken.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> FinPoset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[a], perm[b]));
            }
        }
    }
    FinPoset::from_relation(names(n), &pairs).expect("a linear order's subrelation is acyclic")
}

/// Each point kept independently with probability one half.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, universe: usize) -> Subset {
    Subset::from_indices(universe, (0..universe).filter(|_| rng.gen_bool(0.5)))
}

/// Map from `domain` fresh points `d0, d1, ...` to uniformly random points of `x`.
pub fn random_point_map<R: Rng + ?Sized>(rng: &mut R, x: &FinPoset, domain: usize) -> PointMap {
    assert!(domain == 0 || !x.is_empty(), "no map from a non-empty set to an empty one");
    let images = (0..domain).map(|_| rng.gen_range(0..x.len())).collect();
    PointMap::new((0..domain).map(|i| format!("d{i}")).collect(), images)
        .expect("fresh identifiers are distinct")
}

/// Up-closure of a random subset.
pub fn random_upset<R: Rng + ?Sized>(rng: &mut R, x: &FinPoset) -> Subset {
    let seed = random_subset(rng, x.len());
    x.closure(&seed).expect("subset of the right universe")
}

/// Labelled up-sets whose unions and intersections give every up-set of `x`.
///
/// Random up-sets are drawn first; principal up-sets are added for points
/// whose principal up-set is not yet a meet of chosen ones, since the
/// principal up-sets are the join-irreducibles of the lattice of up-sets.
pub fn random_generating_supports<R: Rng + ?Sized>(rng: &mut R, x: &FinPoset) -> Vec<(String, Subset)> {
    let mut gens: Vec<Subset> = (0..rng.gen_range(0..=x.len())).map(|_| random_upset(rng, x)).collect();
    for p in 0..x.len() {
        let meet = gens
            .iter()
            .filter(|g| g.contains(p))
            .fold(x.full(), |acc, g| acc.intersection(g));
        if meet != *x.up(p) {
            gens.push(x.up(p).clone());
        }
    }
    gens.sort();
    gens.dedup();
    gens.shuffle(rng);
    gens.into_iter()
        .enumerate()
        .map(|(i, g)| (format!("g{}", i + 1), g))
        .collect()
}

/// A finite table tower with `levels` levels and sections.
///
/// Level `n+1` is level `n` plus a few new points, all projecting to one
/// anchor `a` of level `n`; a new point may sit above old points below `a`,
/// which keeps the projection monotone. The sections are the inclusions.
pub fn random_retractable_tower<R: Rng + ?Sized>(rng: &mut R, levels: usize, base: usize) -> (ProSpace, Sections) {
    assert!(levels >= 1 && base >= 1);
    let mut posets = vec![random_poset(rng, base, 0.4)];
    let mut transitions = Vec::new();
    let mut sections = Vec::new();
    for _ in 1..levels {
        let lower = posets.last().expect("non-empty").clone();
        let old = lower.len();
        let fresh = rng.gen_range(1..=2);
        let anchor = rng.gen_range(0..old);
        let mut pairs = lower.covers();
        for y in old..old + fresh {
            for x in lower.down(anchor).iter() {
                if rng.gen_bool(0.3) {
                    pairs.push((x, y));
                }
            }
        }
        if fresh == 2 && rng.gen_bool(0.5) {
            pairs.push((old, old + 1));
        }
        let ids = (0..old + fresh).map(element_name).collect();
        let upper = FinPoset::from_relation(ids, &pairs).expect("new points only sit above old ones");
        transitions.push((0..old).chain(std::iter::repeat_n(anchor, fresh)).collect());
        sections.push((0..old).collect());
        posets.push(upper);
    }
    let space = ProSpace::new(
        Rule::Table {
            levels: posets,
            transitions,
        },
        DEFAULT_DEPTH,
    )
    .expect("projections onto the anchor are monotone");
    (space, Sections::Table(sections))
}
