//! Bounded distributive lattices of subsets and their spectral closure.
//!
//! A [`SetLattice`] is a family of subsets of a finite carrier containing the
//! empty set and the carrier and closed under pairwise `∩` and `∪`. Its
//! spectral closure is the initial finite spectral space receiving a map from
//! the carrier along which exactly the lattice elements are pulled back opens.
//! Two constructions are provided and cross-checked:
//!
//! * [`SetLattice::spectral_closure`]: the poset of join-irreducible elements
//!   ordered by inclusion, with each carrier point sent to the smallest lattice
//!   element containing it.
//! * [`SetLattice::closure_via_evaluation`]: the image of the evaluation map
//!   into a product of Sierpiński spaces indexed by the lattice.
//!
//! Orientation: join-irreducibles are ordered by inclusion, so a smaller
//! join-irreducible is a generalization of a larger one and the opens
//! (down-sets) of the closure correspond to lattice elements. The reverse
//! orientation would produce the Hochster dual.

use std::collections::BTreeSet;

use crate::finspace::{FinPoset, PointMap, SpectralMap, Subset};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetLattice {
    carrier: Vec<String>,
    // sorted by size, then bit order
    elements: Vec<Subset>,
}

fn sort_family(v: &mut Vec<Subset>) {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v.dedup();
}

impl SetLattice {
    /// Validates a ready-made family.
    pub fn new(carrier: Vec<String>, elements: Vec<Subset>) -> Result<Self> {
        let n = carrier.len();
        if let Some(bad) = elements.iter().find(|e| e.universe() != n) {
            return Err(Error::InvalidLattice(format!(
                "element over a {}-point universe, carrier has {n}",
                bad.universe()
            )));
        }
        let set: BTreeSet<Subset> = elements.iter().cloned().collect();
        if !set.contains(&Subset::empty(n)) || !set.contains(&Subset::full(n)) {
            return Err(Error::InvalidLattice(
                "must contain the empty set and the carrier".into(),
            ));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.intersection(b)) || !set.contains(&a.union(b)) {
                    return Err(Error::InvalidLattice(format!(
                        "not closed under ∩ and ∪ ({a:?}, {b:?})"
                    )));
                }
            }
        }
        let mut elements: Vec<Subset> = set.into_iter().collect();
        sort_family(&mut elements);
        Ok(SetLattice { carrier, elements })
    }

    /// Smallest lattice containing `generators`.
    pub fn generate(carrier: Vec<String>, generators: &[Subset]) -> Result<Self> {
        let n = carrier.len();
        if let Some(bad) = generators.iter().find(|g| g.universe() != n) {
            return Err(Error::InvalidSubset(format!(
                "generator over a {}-point universe is not a subset of the {n}-point carrier",
                bad.universe()
            )));
        }
        let mut set: BTreeSet<Subset> = generators.iter().cloned().collect();
        set.insert(Subset::empty(n));
        set.insert(Subset::full(n));
        let mut frontier: Vec<Subset> = set.iter().cloned().collect();
        while !frontier.is_empty() {
            let snapshot: Vec<Subset> = set.iter().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &snapshot {
                    for c in [a.intersection(b), a.union(b)] {
                        if set.insert(c.clone()) {
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Subset> = set.into_iter().collect();
        sort_family(&mut elements);
        Ok(SetLattice { carrier, elements })
    }

    /// Same as [`SetLattice::generate`], by identifiers.
    pub fn generate_named(carrier: &[&str], generators: &[&[&str]]) -> Result<Self> {
        let carrier: Vec<String> = carrier.iter().map(|s| s.to_string()).collect();
        let gens = generators
            .iter()
            .map(|g| subset_of(&carrier, g))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(carrier, &gens)
    }

    /// Pullbacks of all opens of `x` along `i`.
    pub fn restricted(i: &PointMap, x: &FinPoset) -> Result<Self> {
        i.check_target(x)?;
        // Opens are unions of principal ones and preimages commute with unions.
        let gens: Vec<Subset> = (0..x.len()).map(|y| i.preimage(x.down(y))).collect();
        Self::generate(i.domain().to_vec(), &gens)
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.elements.binary_search_by(|e| e.len().cmp(&s.len()).then_with(|| e.cmp(s))).is_ok()
    }

    pub fn names(&self, s: &Subset) -> Vec<&str> {
        let mut v: Vec<&str> = s.iter().map(|x| self.carrier[x].as_str()).collect();
        v.sort_unstable();
        v
    }

    /// Some element contains exactly one of any two distinct points.
    pub fn separates_points(&self) -> bool {
        let n = self.carrier.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| self.elements.iter().any(|u| u.contains(x) != u.contains(y)))
        })
    }

    /// Generator of the principal prime filter `{U : x ∈ U}`.
    pub fn smallest_containing(&self, x: usize) -> Subset {
        self.elements
            .iter()
            .filter(|u| u.contains(x))
            .fold(Subset::full(self.carrier.len()), |acc, u| acc.intersection(u))
    }

    /// Join-irreducible elements: non-empty and not the union of the elements
    /// strictly below them. Returned in carrier order of a representative.
    pub fn join_irreducible_sets(&self) -> Vec<Subset> {
        let n = self.carrier.len();
        let mut out: Vec<Subset> = self
            .elements
            .iter()
            .filter(|j| {
                !j.is_empty() && {
                    let below = self
                        .elements
                        .iter()
                        .filter(|u| u.is_subset(j) && u != j)
                        .fold(Subset::empty(n), |acc, u| acc.union(u));
                    below != **j
                }
            })
            .cloned()
            .collect();
        out.sort_by_key(|j| self.representative(j));
        out
    }

    // First carrier point whose smallest containing element is `j`.
    fn representative(&self, j: &Subset) -> usize {
        j.iter()
            .find(|&x| self.smallest_containing(x) == *j)
            .unwrap_or(usize::MAX)
    }

    /// The poset of join-irreducibles under inclusion. Its opens correspond to
    /// the lattice elements.
    pub fn join_irreducibles(&self) -> (FinPoset, Vec<Subset>) {
        let sets = self.join_irreducible_sets();
        let ids = sets
            .iter()
            .map(|j| match self.representative(j) {
                usize::MAX => format!("{:?}", self.names(j)),
                x => format!("[{}]", self.carrier[x]),
            })
            .collect();
        let poset = FinPoset::from_leq(ids, |a, b| sets[a].is_subset(&sets[b]))
            .expect("inclusion is a partial order");
        (poset, sets)
    }

    /// Spectral closure through join-irreducibles.
    pub fn spectral_closure(&self) -> ClosureResult {
        let (space, sets) = self.join_irreducibles();
        let unit = (0..self.carrier.len())
            .map(|x| {
                let m = self.smallest_containing(x);
                sets.iter()
                    .position(|j| *j == m)
                    .expect("the smallest element containing a point is join-irreducible")
            })
            .collect();
        ClosureResult { space, unit }
    }

    /// Spectral closure as the image of `x ↦ (U ↦ 0 if x ∈ U else 1)` in the
    /// product of Sierpiński spaces indexed by the lattice elements. Points
    /// are named by their coordinate strings.
    pub fn closure_via_evaluation(&self) -> ClosureResult {
        let eval = |x: usize| -> Vec<u8> {
            self.elements
                .iter()
                .map(|u| if u.contains(x) { 0 } else { 1 })
                .collect()
        };
        let mut image: Vec<Vec<u8>> = Vec::new();
        let unit = (0..self.carrier.len())
            .map(|x| {
                let v = eval(x);
                match image.iter().position(|w| *w == v) {
                    Some(i) => i,
                    None => {
                        image.push(v);
                        image.len() - 1
                    }
                }
            })
            .collect();
        let ids = image
            .iter()
            .map(|v| v.iter().map(|b| char::from(b'0' + b)).collect())
            .collect();
        // Product order of copies of {0 ⇝ 1}.
        let space = FinPoset::from_leq(ids, |a, b| {
            image[a].iter().zip(&image[b]).all(|(p, q)| p <= q)
        })
        .expect("distinct coordinate vectors under the product order form a poset");
        ClosureResult { space, unit }
    }
}

fn subset_of(carrier: &[String], members: &[&str]) -> Result<Subset> {
    let mut s = Subset::empty(carrier.len());
    for m in members {
        let x = carrier.iter().position(|c| c == m).ok_or_else(|| {
            Error::InvalidSubset(format!("`{m}` is not in the carrier"))
        })?;
        s.insert(x);
    }
    Ok(s)
}

/// A finite spectral space together with the unit map from the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub space: FinPoset,
    /// `unit[x]` is the point of `space` receiving carrier point `x`.
    pub unit: Vec<usize>,
}

impl ClosureResult {
    pub fn pullback(&self, open: &Subset) -> Subset {
        Subset::from_indices(
            self.unit.len(),
            (0..self.unit.len()).filter(|&x| open.contains(self.unit[x])),
        )
    }

    /// Whether `U ↦ unit⁻¹(U)` is a bijection from the opens of the space onto
    /// the lattice elements.
    pub fn unit_star_is_bijection(&self, lattice: &SetLattice) -> bool {
        let opens = self.space.opens();
        let pulled: BTreeSet<Subset> = opens.iter().map(|u| self.pullback(u)).collect();
        pulled.len() == opens.len()
            && pulled.len() == lattice.len()
            && pulled.iter().all(|p| lattice.contains(p))
    }

    pub fn unit_is_injective(&self) -> bool {
        let distinct: BTreeSet<usize> = self.unit.iter().copied().collect();
        distinct.len() == self.unit.len()
    }

    /// Unique map `f̄` on the closure with `f̄ ∘ unit = f`, for `f` a function
    /// from the carrier into `target` that pulls opens back into `lattice`.
    pub fn factor(
        &self,
        lattice: &SetLattice,
        target: &FinPoset,
        f: &[usize],
    ) -> Result<SpectralMap> {
        if f.len() != self.unit.len() {
            return Err(Error::NotTotal("map must be defined on the whole carrier".into()));
        }
        if let Some(&y) = f.iter().find(|&&y| y >= target.len()) {
            return Err(Error::NotTotal(format!("image #{y} outside the target")));
        }
        for y in 0..target.len() {
            let pre = Subset::from_indices(f.len(), (0..f.len()).filter(|&x| target.down(y).contains(f[x])));
            if !lattice.contains(&pre) {
                return Err(Error::Precondition(format!(
                    "preimage of the open around `{}` is not a lattice element",
                    target.id(y)
                )));
            }
        }
        let mut assignment: Vec<Option<usize>> = vec![None; self.space.len()];
        for (x, &p) in self.unit.iter().enumerate() {
            match assignment[p] {
                None => assignment[p] = Some(f[x]),
                Some(y) if y == f[x] => {}
                Some(_) => {
                    return Err(Error::NoIsomorphism(format!(
                        "closure point `{}` would need two images",
                        self.space.id(p)
                    )))
                }
            }
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(p, y)| {
                y.ok_or_else(|| {
                    Error::NoIsomorphism(format!(
                        "closure point `{}` is not hit by the unit",
                        self.space.id(p)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SpectralMap::new(self.space.clone(), target.clone(), assignment)
    }

    /// The isomorphism onto `other` commuting with both units, if there is one.
    pub fn canonical_iso(&self, other: &ClosureResult) -> Result<Vec<usize>> {
        if self.unit.len() != other.unit.len() {
            return Err(Error::NoIsomorphism("carriers differ in size".into()));
        }
        if self.space.len() != other.space.len() {
            return Err(Error::NoIsomorphism(format!(
                "{} points against {}",
                self.space.len(),
                other.space.len()
            )));
        }
        let mut map: Vec<Option<usize>> = vec![None; self.space.len()];
        for (x, &p) in self.unit.iter().enumerate() {
            let q = other.unit[x];
            match map[p] {
                None => map[p] = Some(q),
                Some(prev) if prev == q => {}
                Some(_) => {
                    return Err(Error::NoIsomorphism(format!(
                        "units disagree at `{}`",
                        self.space.id(p)
                    )))
                }
            }
        }
        let map = map
            .into_iter()
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::NoIsomorphism("unit is not surjective".into()))?;
        check_order_iso(&self.space, &other.space, &map)?;
        Ok(map)
    }

    /// Map between closures induced by a morphism of pairs `g`: a function
    /// between carriers with `g⁻¹(U') ∈ L` for every `U' ∈ L'`.
    pub fn induced_map(
        &self,
        lattice: &SetLattice,
        target: &ClosureResult,
        target_lattice: &SetLattice,
        g: &[usize],
    ) -> Result<SpectralMap> {
        for u in target_lattice.elements() {
            let pre = Subset::from_indices(g.len(), (0..g.len()).filter(|&x| u.contains(g[x])));
            if !lattice.contains(&pre) {
                return Err(Error::Precondition(
                    "not a morphism of pairs: a lattice element pulls back outside the source lattice"
                        .into(),
                ));
            }
        }
        let composite: Vec<usize> = g.iter().map(|&y| target.unit[y]).collect();
        self.factor(lattice, &target.space, &composite)
    }
}

/// Checks that `map` is a bijection with `a <= b ⇔ map(a) <= map(b)`.
pub fn check_order_iso(source: &FinPoset, target: &FinPoset, map: &[usize]) -> Result<()> {
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    if distinct.len() != map.len() || map.len() != target.len() {
        return Err(Error::NoIsomorphism("not a bijection".into()));
    }
    for a in 0..source.len() {
        for b in 0..source.len() {
            if source.leq(a, b) != target.leq(map[a], map[b]) {
                return Err(Error::NoIsomorphism(format!(
                    "order not preserved between `{}` and `{}`",
                    source.id(a),
                    source.id(b)
                )));
            }
        }
    }
    Ok(())
}

/// The image of `i: D -> X` as a subspace, identified with the spectral
/// closure of the restricted lattice.
#[derive(Clone, Debug)]
pub struct Realization {
    /// Image of `i` with the induced order.
    pub image: FinPoset,
    /// Image point index to ambient point index.
    pub embedding: Vec<usize>,
    /// `i` corestricted to the image.
    pub corestriction: Vec<usize>,
    pub lattice: SetLattice,
    pub closure: ClosureResult,
    /// Closure point to image point; the map `j̄` with `j̄ ∘ unit = j`.
    pub iso: Vec<usize>,
}

/// Realizes the spectral closure of the restricted lattice of `i` inside `x`.
///
/// The comparison map comes from the universal property of the closure; an
/// `Err(NoIsomorphism)` would mean the closure computation is wrong.
pub fn realize_in_ambient(i: &PointMap, x: &FinPoset) -> Result<Realization> {
    i.check_target(x)?;
    let image_set = i.image_set(x.len());
    let (image, embedding) = x.subposet(&image_set);
    let corestriction: Vec<usize> = i
        .images()
        .iter()
        .map(|y| embedding.binary_search(y).expect("image point is embedded"))
        .collect();
    let lattice = SetLattice::restricted(i, x)?;
    let closure = lattice.spectral_closure();
    let jbar = closure.factor(&lattice, &image, &corestriction)?;
    check_order_iso(&closure.space, &image, jbar.assignment())?;

    // The triangle of lattices commutes: unit⁻¹(j̄⁻¹(O)) = j⁻¹(O).
    for o in image.opens() {
        let via_closure = closure.pullback(&jbar.preimage(&o));
        let direct = Subset::from_indices(
            corestriction.len(),
            (0..corestriction.len()).filter(|&d| o.contains(corestriction[d])),
        );
        if via_closure != direct {
            return Err(Error::NoIsomorphism("lattice triangle does not commute".into()));
        }
    }
    Ok(Realization {
        iso: jbar.assignment().to_vec(),
        image,
        embedding,
        corestriction,
        lattice,
        closure,
    })
}
