//! Finite spectral spaces, encoded by their specialization order.
//!
//! Convention used throughout the crate: `x <= y` means that `y` lies in the
//! closure of `{x}` (a specialization `x ⇝ y`). Closed sets are therefore the
//! up-sets and open sets the down-sets. Every open of a finite space is
//! quasi-compact, so Thomason subsets are exactly the up-sets.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

/// Spaces up to this size have their constructible sets listed explicitly.
/// Larger spaces answer constructibility queries from the atoms of the
/// generating Boolean algebra.
pub const MATERIALIZE_LIMIT: usize = 16;

/// Up-set pairs are enumerated exhaustively when a space has at most this
/// many Thomason subsets.
const VISIBILITY_ENUMERATION_LIMIT: usize = 64;

/// A set of element indices of some finite universe.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Subset::empty(universe);
        s.insert(x);
        s
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Subset::empty(universe);
        for x in indices {
            s.insert(x);
        }
        s
    }

    /// Subset whose members are the set bits of `mask` (universe at most 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64);
        Subset::from_indices(universe, (0..universe).filter(|i| mask >> i & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn insert(&mut self, x: usize) {
        self.bits.insert(x);
    }

    pub fn remove(&mut self, x: usize) {
        self.bits.remove(x);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Subset { bits }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Subset { bits }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Subset { bits }
    }

    pub fn complement(&self) -> Subset {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Subset { bits }
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn meets(&self, other: &Subset) -> bool {
        !self.is_disjoint(other)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite spectral space presented by its specialization order.
#[derive(Clone)]
pub struct FinPoset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    // up[x] = closure of {x}; down[x] = smallest open containing x.
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl PartialEq for FinPoset {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.up == other.up
    }
}

impl Eq for FinPoset {}

impl fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{} < {}", self.ids[a], self.ids[b]))
            .collect();
        f.debug_struct("FinPoset")
            .field("elements", &self.ids)
            .field("covers", &covers)
            .finish()
    }
}

fn index_ids(ids: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(Error::DuplicateElement(id.clone()));
        }
    }
    Ok(index)
}

impl FinPoset {
    /// Builds a poset from an explicit `<=` predicate, checking reflexivity,
    /// transitivity and antisymmetry.
    pub fn from_leq<F>(ids: Vec<String>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = ids.len();
        let index = index_ids(&ids)?;
        let mut up = vec![Subset::empty(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.insert(y);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotPartialOrder(format!(
                    "`{}` is not <= itself",
                    ids[x]
                )));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::Antisymmetry(ids[x].clone(), ids[y].clone()));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::NotPartialOrder(format!(
                        "not transitive through `{}` <= `{}`",
                        ids[x], ids[y]
                    )));
                }
            }
        }
        Ok(Self::assemble(ids, index, up))
    }

    /// Builds a poset from generating pairs `(a, b)` meaning `a ⇝ b`; the
    /// reflexive-transitive closure is taken and antisymmetry is checked.
    pub fn from_relation(ids: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = ids.len();
        let index = index_ids(&ids)?;
        let mut up: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("#{}", a.max(b))));
            }
            up[a].insert(b);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    let (a, b) = if x < y { (x, y) } else { (y, x) };
                    return Err(Error::Antisymmetry(ids[a].clone(), ids[b].clone()));
                }
            }
        }
        Ok(Self::assemble(ids, index, up))
    }

    /// Convenience constructor by identifiers: `le` lists specializations `a ⇝ b`.
    pub fn new(ids: &[&str], le: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
        let index = index_ids(&owned)?;
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let pairs = le
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_relation(owned, &pairs)
    }

    fn assemble(ids: Vec<String>, index: HashMap<String, usize>, up: Vec<Subset>) -> Self {
        let n = ids.len();
        let mut down = vec![Subset::empty(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        FinPoset {
            ids,
            index,
            up,
            down,
        }
    }

    /// Chain `ids[0] ⇝ ids[1] ⇝ ...`.
    pub fn chain_of<S: AsRef<str>>(ids: &[S]) -> Self {
        let ids: Vec<String> = ids.iter().map(|s| s.as_ref().to_string()).collect();
        let n = ids.len();
        let index = index_ids(&ids).expect("chain identifiers must be distinct");
        let up = (0..n).map(|x| Subset::from_indices(n, x..n)).collect();
        Self::assemble(ids, index, up)
    }

    /// Chain on `n` points named `0, 1, ...`, with `n-1` the closed point.
    pub fn chain(n: usize) -> Self {
        let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::chain_of(&ids)
    }

    /// Discrete space on `n` points named `0, 1, ...`.
    pub fn antichain(n: usize) -> Self {
        let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = index_ids(&ids).expect("distinct");
        let up = (0..n).map(|x| Subset::singleton(n, x)).collect();
        Self::assemble(ids, index, up)
    }

    /// The Sierpiński space `{0 ⇝ 1}` with `1` the closed point.
    pub fn sierpinski() -> Self {
        Self::chain(2)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, x: usize) -> &str {
        &self.ids[x]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    /// `x ⇝ y`, i.e. `y` is in the closure of `{x}`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Closure of `{x}`.
    pub fn up(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    /// Generalizations of `x`; the smallest open containing `x`.
    pub fn down(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn subset<S: AsRef<str>>(&self, members: &[S]) -> Result<Subset> {
        let mut s = self.empty();
        for m in members {
            let x = self.index_of(m.as_ref()).map_err(|_| {
                Error::InvalidSubset(format!("`{}` is not an element of the space", m.as_ref()))
            })?;
            s.insert(x);
        }
        Ok(s)
    }

    pub fn check_subset(&self, s: &Subset) -> Result<()> {
        if s.universe() != self.len() {
            return Err(Error::InvalidSubset(format!(
                "subset of a {}-point universe used in a {}-point space",
                s.universe(),
                self.len()
            )));
        }
        Ok(())
    }

    /// Identifiers of the members of `s`, sorted.
    pub fn names(&self, s: &Subset) -> Vec<&str> {
        let mut v: Vec<&str> = s.iter().map(|x| self.id(x)).collect();
        v.sort_unstable();
        v
    }

    /// Strict covering pairs `(a, b)`, `a < b` with nothing in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.up[a].iter() {
                if a == b {
                    continue;
                }
                let between = self.up[a]
                    .intersection(&self.down[b])
                    .iter()
                    .any(|c| c != a && c != b);
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Indices ordered so that `x < y` puts `x` first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    fn up_closure(&self, s: &Subset) -> Subset {
        s.iter()
            .fold(self.empty(), |acc, x| acc.union(&self.up[x]))
    }

    fn down_closure(&self, s: &Subset) -> Subset {
        s.iter()
            .fold(self.empty(), |acc, x| acc.union(&self.down[x]))
    }

    /// Smallest closed set containing `s`.
    pub fn closure(&self, s: &Subset) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(self.up_closure(s))
    }

    pub fn is_open(&self, s: &Subset) -> bool {
        s.universe() == self.len() && self.down_closure(s) == *s
    }

    pub fn is_closed(&self, s: &Subset) -> bool {
        s.universe() == self.len() && self.up_closure(s) == *s
    }

    /// All open subsets (down-sets), smallest first.
    ///
    /// Exponential in the width of the poset.
    pub fn opens(&self) -> Vec<Subset> {
        fn walk(p: &FinPoset, order: &[usize], k: usize, cur: &mut Subset, out: &mut Vec<Subset>) {
            if k == order.len() {
                out.push(cur.clone());
                return;
            }
            let y = order[k];
            walk(p, order, k + 1, cur, out);
            let mut below = p.down[y].clone();
            below.remove(y);
            if below.is_subset(cur) {
                cur.insert(y);
                walk(p, order, k + 1, cur, out);
                cur.remove(y);
            }
        }
        let order = self.linear_extension();
        let mut out = Vec::new();
        walk(self, &order, 0, &mut self.empty(), &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// All closed subsets (up-sets), smallest first. These are also the
    /// Thomason subsets.
    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self.opens().iter().map(Subset::complement).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Closed points, i.e. maximal elements.
    pub fn closed_points(&self) -> Subset {
        Subset::from_indices(
            self.len(),
            (0..self.len()).filter(|&x| self.up[x].len() == 1),
        )
    }

    pub fn is_antichain(&self) -> bool {
        self.up.iter().all(|u| u.len() == 1)
    }

    /// Same points, order reversed. Its opens are the Thomason subsets of `self`.
    pub fn hochster_dual(&self) -> FinPoset {
        FinPoset {
            ids: self.ids.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Thomason subsets of a finite space are its specialization-closed subsets.
    pub fn is_thomason(&self, s: &Subset) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.is_closed(s))
    }

    /// Atoms of the Boolean algebra generated by the opens: for each point,
    /// the intersection of the principal opens containing it with the
    /// complements of those that do not.
    pub fn constructible_atoms(&self) -> Vec<Subset> {
        let n = self.len();
        let mut atoms: Vec<Subset> = (0..n)
            .map(|x| {
                (0..n).fold(self.full(), |acc, y| {
                    if self.down[y].contains(x) {
                        acc.intersection(&self.down[y])
                    } else {
                        acc.difference(&self.down[y])
                    }
                })
            })
            .collect();
        atoms.sort();
        atoms.dedup();
        atoms
    }

    /// Whether `s` is a finite Boolean combination of opens.
    pub fn is_constructible(&self, s: &Subset) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self
            .constructible_atoms()
            .iter()
            .all(|a| a.is_subset(s) || a.is_disjoint(s)))
    }

    /// Every constructible subset, listed. For a finite space this is the
    /// whole power set; the list is produced by taking all unions of atoms.
    pub fn constructible_sets(&self) -> Result<Vec<Subset>> {
        if self.len() > MATERIALIZE_LIMIT {
            return Err(Error::TooLarge(format!(
                "constructible sets are only listed for at most {MATERIALIZE_LIMIT} points"
            )));
        }
        let atoms = self.constructible_atoms();
        let mut out = Vec::with_capacity(1 << atoms.len());
        for mask in 0u64..(1u64 << atoms.len()) {
            let s = atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(self.empty(), |acc, (_, a)| acc.union(a));
            out.push(s);
        }
        debug_assert_eq!(out.len(), 1usize << self.len());
        Ok(out)
    }

    /// Whether `d` meets every non-empty constructible subset.
    pub fn is_patch_dense(&self, d: &Subset) -> Result<bool> {
        self.check_subset(d)?;
        if self.len() <= MATERIALIZE_LIMIT {
            Ok(self
                .constructible_sets()?
                .iter()
                .all(|c| c.is_empty() || c.meets(d)))
        } else {
            // Every non-empty constructible contains an atom.
            Ok(self.constructible_atoms().iter().all(|a| a.meets(d)))
        }
    }

    /// Points `x` with `{x}` an intersection of an open and a closed set.
    pub fn locally_closed_points(&self) -> Subset {
        Subset::from_indices(
            self.len(),
            (0..self.len())
                .filter(|&x| self.down[x].intersection(&self.up[x]) == Subset::singleton(self.len(), x)),
        )
    }

    /// Thomason subsets `(V, W)` with `V \ W = {x}`, if any.
    pub fn weak_visibility_witness(&self, x: usize) -> Option<(Subset, Subset)> {
        let target = Subset::singleton(self.len(), x);
        let thomason = self.closed_sets();
        if thomason.len() <= VISIBILITY_ENUMERATION_LIMIT {
            for v in thomason.iter().filter(|v| v.contains(x)) {
                for w in &thomason {
                    if v.difference(w) == target {
                        return Some((v.clone(), w.clone()));
                    }
                }
            }
            None
        } else {
            let v = self.up[x].clone();
            let mut w = v.clone();
            w.remove(x);
            (self.is_closed(&w) && v.difference(&w) == target).then_some((v, w))
        }
    }

    pub fn weakly_visible_points(&self) -> Subset {
        Subset::from_indices(
            self.len(),
            (0..self.len()).filter(|&x| self.weak_visibility_witness(x).is_some()),
        )
    }

    /// Closed points are dense in every closed subset.
    pub fn is_jacobson(&self) -> bool {
        let closed_points = self.closed_points();
        self.closed_sets()
            .iter()
            .all(|c| self.up_closure(&closed_points.intersection(c)) == *c)
    }

    /// Evaluates the three equivalent density conditions for `i: D -> X`
    /// independently of each other.
    pub fn lemma_dense_epi(&self, i: &PointMap) -> Result<DenseEpi> {
        i.check_target(self)?;
        let image = i.image_set(self.len());
        let patch_dense = self.is_patch_dense(&image)?;

        let opens = self.opens();
        let pulled: Vec<Subset> = opens.iter().map(|u| i.preimage(u)).collect();
        let mut opens_reflected = true;
        'outer: for (a, u) in opens.iter().enumerate() {
            for (b, v) in opens.iter().enumerate() {
                if pulled[a].is_subset(&pulled[b]) && !u.is_subset(v) {
                    opens_reflected = false;
                    break 'outer;
                }
            }
        }

        // Spectral maps into the Sierpiński space are exactly the
        // characteristic maps of opens (open part sent to the generic point 0).
        let sierpinski = FinPoset::sierpinski();
        let chars: Vec<SpectralMap> = opens
            .iter()
            .map(|u| {
                let assignment = (0..self.len())
                    .map(|x| if u.contains(x) { 0 } else { 1 })
                    .collect();
                SpectralMap::new(self.clone(), sierpinski.clone(), assignment)
            })
            .collect::<Result<_>>()?;
        let composites: Vec<Vec<usize>> = chars
            .iter()
            .map(|alpha| i.images().iter().map(|&x| alpha.apply(x)).collect())
            .collect();
        let mut sierpinski_epi = true;
        'outer2: for a in 0..chars.len() {
            for b in 0..chars.len() {
                if a != b && composites[a] == composites[b] && chars[a] != chars[b] {
                    sierpinski_epi = false;
                    break 'outer2;
                }
            }
        }

        Ok(DenseEpi {
            patch_dense,
            opens_reflected,
            sierpinski_epi,
        })
    }

    /// The subspace on `s` with the induced order, and the embedding.
    pub fn subposet(&self, s: &Subset) -> (FinPoset, Vec<usize>) {
        let embed: Vec<usize> = s.iter().collect();
        let ids = embed.iter().map(|&x| self.ids[x].clone()).collect();
        let sub = FinPoset::from_leq(ids, |a, b| self.leq(embed[a], embed[b]))
            .expect("induced order of a partial order is a partial order");
        (sub, embed)
    }
}

/// The three conditions of the density lemma for a function `D -> X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenseEpi {
    /// The image meets every non-empty constructible.
    pub patch_dense: bool,
    /// `i⁻¹(U) ⊆ i⁻¹(V)` forces `U ⊆ V` for all opens.
    pub opens_reflected: bool,
    /// Spectral maps to the Sierpiński space are determined by their
    /// restriction along `i`.
    pub sierpinski_epi: bool,
}

impl DenseEpi {
    pub fn agree(&self) -> bool {
        self.patch_dense == self.opens_reflected && self.opens_reflected == self.sierpinski_epi
    }
}

/// A plain function from a finite labelled set into the points of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    domain: Vec<String>,
    images: Vec<usize>,
}

impl PointMap {
    pub fn new(domain: Vec<String>, images: Vec<usize>) -> Result<Self> {
        if domain.len() != images.len() {
            return Err(Error::NotTotal(format!(
                "{} domain labels but {} images",
                domain.len(),
                images.len()
            )));
        }
        index_ids(&domain)?;
        Ok(PointMap { domain, images })
    }

    pub fn identity(x: &FinPoset) -> Self {
        PointMap {
            domain: x.ids.clone(),
            images: (0..x.len()).collect(),
        }
    }

    /// Inclusion of the members of `s`, labelled by their identifiers.
    pub fn inclusion(x: &FinPoset, s: &Subset) -> Self {
        let images: Vec<usize> = s.iter().collect();
        PointMap {
            domain: images.iter().map(|&i| x.ids[i].clone()).collect(),
            images,
        }
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn check_target(&self, x: &FinPoset) -> Result<()> {
        match self.images.iter().position(|&y| y >= x.len()) {
            Some(d) => Err(Error::NotTotal(format!(
                "`{}` is sent outside the {}-point target",
                self.domain[d],
                x.len()
            ))),
            None => Ok(()),
        }
    }

    pub fn image_set(&self, target_len: usize) -> Subset {
        Subset::from_indices(target_len, self.images.iter().copied())
    }

    /// Preimage as a subset of the domain.
    pub fn preimage(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.len(),
            (0..self.len()).filter(|&d| s.contains(self.images[d])),
        )
    }
}

/// A monotone map between finite spectral spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralMap {
    source: FinPoset,
    target: FinPoset,
    assignment: Vec<usize>,
}

impl SpectralMap {
    pub fn new(source: FinPoset, target: FinPoset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::NotTotal(format!(
                "{} images for a {}-point source",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(x) = assignment.iter().position(|&y| y >= target.len()) {
            return Err(Error::NotTotal(format!(
                "`{}` is sent outside the target",
                source.id(x)
            )));
        }
        for a in 0..source.len() {
            for b in source.up(a).iter() {
                if !target.leq(assignment[a], assignment[b]) {
                    return Err(Error::NotMonotone {
                        from_lo: source.id(a).to_string(),
                        from_hi: source.id(b).to_string(),
                        to_lo: target.id(assignment[a]).to_string(),
                        to_hi: target.id(assignment[b]).to_string(),
                    });
                }
            }
        }
        Ok(SpectralMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(x: &FinPoset) -> Self {
        SpectralMap {
            source: x.clone(),
            target: x.clone(),
            assignment: (0..x.len()).collect(),
        }
    }

    pub fn source(&self) -> &FinPoset {
        &self.source
    }

    pub fn target(&self) -> &FinPoset {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn preimage(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.source.len(),
            (0..self.source.len()).filter(|&x| s.contains(self.assignment[x])),
        )
    }

    pub fn image(&self) -> Subset {
        Subset::from_indices(self.target.len(), self.assignment.iter().copied())
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SpectralMap) -> Result<SpectralMap> {
        if next.source != self.target {
            return Err(Error::NotTotal("composable maps must share a space".into()));
        }
        Ok(SpectralMap {
            source: self.source.clone(),
            target: next.target.clone(),
            assignment: self.assignment.iter().map(|&x| next.apply(x)).collect(),
        })
    }

    pub fn as_point_map(&self) -> PointMap {
        PointMap {
            domain: self.source.ids.clone(),
            images: self.assignment.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> FinPoset {
        FinPoset::new(&["a", "b"], &[("a", "b")]).unwrap()
    }

    #[test]
    fn closure_examples() {
        let x = two_chain();
        let a = x.subset(&["a"]).unwrap();
        assert_eq!(x.closure(&a).unwrap(), x.full());
        assert_eq!(x.closure(&x.empty()).unwrap(), x.empty());

        let s = FinPoset::sierpinski();
        let one = s.subset(&["1"]).unwrap();
        assert_eq!(s.closure(&one).unwrap(), one);
    }

    #[test]
    fn closure_rejects_foreign_subset() {
        let x = two_chain();
        assert!(matches!(
            x.closure(&Subset::full(3)),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(x.subset(&["z"]), Err(Error::InvalidSubset(_))));
    }

    #[test]
    fn antisymmetry_is_rejected() {
        let err = FinPoset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, Error::Antisymmetry("a".into(), "b".into()));
    }

    #[test]
    fn from_leq_checks_all_axioms() {
        let ids = || vec!["a".to_string(), "b".to_string(), "c".to_string()];
        // not reflexive
        assert!(FinPoset::from_leq(ids(), |a, b| a < b).is_err());
        // not transitive: a<=b, b<=c, but not a<=c
        assert!(FinPoset::from_leq(ids(), |a, b| a == b || b == a + 1).is_err());
        assert!(FinPoset::from_leq(ids(), |a, b| a <= b).is_ok());
    }

    #[test]
    fn hochster_dual_examples() {
        let s = FinPoset::sierpinski();
        let d = s.hochster_dual();
        assert!(d.leq(1, 0));
        assert!(!d.leq(0, 1));
        let a = FinPoset::antichain(3);
        assert_eq!(a.hochster_dual(), a);
        assert_eq!(s.hochster_dual().hochster_dual(), s);
    }

    #[test]
    fn dual_opens_are_thomason() {
        let x = FinPoset::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let dual_opens = x.hochster_dual().opens();
        let thomason: Vec<Subset> = x
            .closed_sets()
            .into_iter()
            .filter(|s| x.is_thomason(s).unwrap())
            .collect();
        let mut a = dual_opens.clone();
        let mut b = thomason;
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn thomason_examples() {
        let x = two_chain();
        assert!(x.is_thomason(&x.subset(&["b"]).unwrap()).unwrap());
        assert!(!x.is_thomason(&x.subset(&["a"]).unwrap()).unwrap());
        assert!(x.is_thomason(&x.full()).unwrap());
    }

    #[test]
    fn constructible_examples() {
        let one = FinPoset::antichain(1);
        let c = one.constructible_sets().unwrap();
        assert_eq!(c, vec![one.empty(), one.full()]);
        assert_eq!(FinPoset::sierpinski().constructible_sets().unwrap().len(), 4);
    }

    #[test]
    fn constructible_sets_refuse_large_spaces() {
        let big = FinPoset::chain(MATERIALIZE_LIMIT + 1);
        assert!(matches!(big.constructible_sets(), Err(Error::TooLarge(_))));
        let s = Subset::singleton(big.len(), 3);
        assert!(big.is_constructible(&s).unwrap());
        assert!(!big.is_patch_dense(&s).unwrap());
        assert!(big.is_patch_dense(&big.full()).unwrap());
    }

    #[test]
    fn patch_density_examples() {
        let s = FinPoset::sierpinski();
        assert!(s.is_patch_dense(&s.full()).unwrap());
        assert!(!s.is_patch_dense(&s.subset(&["0"]).unwrap()).unwrap());
    }

    #[test]
    fn locally_closed_and_visible_examples() {
        let one = FinPoset::antichain(1);
        assert_eq!(one.locally_closed_points(), one.full());
        assert_eq!(one.weakly_visible_points(), one.full());
        let x = two_chain();
        assert_eq!(x.weakly_visible_points(), x.full());
        let (v, w) = x.weak_visibility_witness(0).unwrap();
        assert_eq!(v.difference(&w), Subset::singleton(2, 0));
        assert!(x.is_patch_dense(&x.locally_closed_points()).unwrap());
    }

    #[test]
    fn jacobson_examples() {
        assert!(FinPoset::antichain(3).is_jacobson());
        assert!(!FinPoset::sierpinski().is_jacobson());
        assert!(FinPoset::antichain(0).is_jacobson());
    }

    #[test]
    fn dense_epi_examples() {
        let s = FinPoset::sierpinski();
        let id = PointMap::identity(&s);
        let all = s.lemma_dense_epi(&id).unwrap();
        assert!(all.patch_dense && all.opens_reflected && all.sierpinski_epi);

        let generic = PointMap::inclusion(&s, &s.subset(&["0"]).unwrap());
        let r = s.lemma_dense_epi(&generic).unwrap();
        assert_eq!(
            r,
            DenseEpi {
                patch_dense: false,
                opens_reflected: false,
                sierpinski_epi: false
            }
        );
    }

    #[test]
    fn spectral_map_must_be_monotone() {
        let s = FinPoset::sierpinski();
        let swap = SpectralMap::new(s.clone(), s.clone(), vec![1, 0]);
        assert!(matches!(swap, Err(Error::NotMonotone { .. })));
        let collapse = SpectralMap::new(s.clone(), s.clone(), vec![1, 1]).unwrap();
        assert_eq!(collapse.preimage(&s.subset(&["0"]).unwrap()), s.empty());
        let id = SpectralMap::identity(&s);
        assert_eq!(id.then(&collapse).unwrap(), collapse);
    }

    #[test]
    fn opens_of_small_posets() {
        assert_eq!(FinPoset::chain(3).opens().len(), 4);
        assert_eq!(FinPoset::antichain(3).opens().len(), 8);
        let v = FinPoset::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        // ∅, a, b, ab, abc
        assert_eq!(v.opens().len(), 5);
        assert!(v.opens().iter().all(|u| v.is_open(u)));
    }
}
