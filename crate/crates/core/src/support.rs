//! Supports of formal objects and what a dense subset remembers of them.
//!
//! A [`SupportDatum`] assigns a Thomason subset to each generator label and
//! extends to [`ObjectTerm`]s built with `⊗`, `⊕` and `Σ`:
//! `supp(a ⊗ b) = supp(a) ∩ supp(b)`, `supp(a ⊕ b) = supp(a) ∪ supp(b)`,
//! `supp(Σa) = supp(a)`, `supp(0) = ∅` and `supp(1)` is the whole space.
//! Cones are not part of the term language: the support of a cone is not a
//! function of the supports of its ends.
//!
//! Over a sequential limit every support is presented at one working level
//! `L`, so all set computations happen inside the finite poset `X_L`, cut
//! down to the points that come from the limit.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::finspace::{FinPoset, SpectralMap, Subset};
use crate::lattice::{check_order_iso, ClosureResult, SetLattice};
use crate::prospace::{DenseFamily, LevelSet, ProDensity, ProSpace, Rule, CHAIN_TOP};
use crate::{Error, Result};

/// Largest term size enumerated when none is given.
pub const DEFAULT_BOUND: usize = 6;

/// A formal object: generators combined by tensor, sum and suspension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectTerm {
    Zero,
    One,
    Gen(String),
    Susp(Box<ObjectTerm>),
    Tensor(Box<ObjectTerm>, Box<ObjectTerm>),
    Sum(Box<ObjectTerm>, Box<ObjectTerm>),
}

impl ObjectTerm {
    pub fn gen(label: impl Into<String>) -> Self {
        ObjectTerm::Gen(label.into())
    }

    pub fn tensor(a: ObjectTerm, b: ObjectTerm) -> Self {
        ObjectTerm::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sum(a: ObjectTerm, b: ObjectTerm) -> Self {
        ObjectTerm::Sum(Box::new(a), Box::new(b))
    }

    pub fn susp(a: ObjectTerm) -> Self {
        ObjectTerm::Susp(Box::new(a))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            ObjectTerm::Zero | ObjectTerm::One | ObjectTerm::Gen(_) => 1,
            ObjectTerm::Susp(a) => 1 + a.size(),
            ObjectTerm::Tensor(a, b) | ObjectTerm::Sum(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl fmt::Display for ObjectTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectTerm::Zero => write!(f, "0"),
            ObjectTerm::One => write!(f, "1"),
            ObjectTerm::Gen(l) => write!(f, "{l}"),
            ObjectTerm::Susp(a) => write!(f, "S({a})"),
            ObjectTerm::Tensor(a, b) => write!(f, "({a} * {b})"),
            ObjectTerm::Sum(a, b) => write!(f, "({a} + {b})"),
        }
    }
}

#[derive(Clone, Debug)]
enum Ambient {
    Finite(FinPoset),
    Pro(Arc<ProSpace>),
}

/// Generator supports over a finite space or a sequential limit.
#[derive(Clone, Debug)]
pub struct SupportDatum {
    ambient: Ambient,
    // working level; 0 for finite spaces
    level: usize,
    // points of the working level that come from the space
    live: Subset,
    gens: BTreeMap<String, Subset>,
}

/// Smallest family containing `seed`, `∅` and `top`, closed under `∩`, `∪`.
fn lattice_closure(seed: impl IntoIterator<Item = Subset>, top: &Subset) -> BTreeSet<Subset> {
    let mut set: BTreeSet<Subset> = seed.into_iter().collect();
    set.insert(Subset::empty(top.universe()));
    set.insert(top.clone());
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
    set
}

/// Up-sets of `x` cut down to `live`.
fn live_upsets(x: &FinPoset, live: &Subset) -> BTreeSet<Subset> {
    x.closed_sets().iter().map(|u| u.intersection(live)).collect()
}

impl SupportDatum {
    /// Datum on a finite space; every support must be an up-set.
    pub fn finite<S: Into<String>>(space: FinPoset, gens: Vec<(S, Subset)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, s) in gens {
            let label = label.into();
            if !space.is_thomason(&s)? {
                return Err(Error::NotThomason);
            }
            if map.insert(label.clone(), s).is_some() {
                return Err(Error::DuplicateElement(label));
            }
        }
        Ok(SupportDatum {
            live: space.full(),
            ambient: Ambient::Finite(space),
            level: 0,
            gens: map,
        })
    }

    /// Datum on a limit; supports are level sets checked to be up-sets at
    /// their own level and presented together at the deepest level used.
    pub fn pro<S: Into<String>>(space: Arc<ProSpace>, gens: Vec<(S, LevelSet)>) -> Result<Self> {
        let level = gens.iter().map(|(_, c)| c.level()).max().unwrap_or(0);
        let live = space.limit_image(level)?;
        let mut map = BTreeMap::new();
        for (label, c) in gens {
            let label = label.into();
            if !space.is_thomason(&c)? {
                return Err(Error::NotThomason);
            }
            let at = space.lift(&c, level)?.members().intersection(&live);
            if map.insert(label.clone(), at).is_some() {
                return Err(Error::DuplicateElement(label));
            }
        }
        Ok(SupportDatum {
            ambient: Ambient::Pro(space),
            level,
            live,
            gens: map,
        })
    }

    /// On the chain-growth tower: `g_n` supported on `{C_n, C_(n+1), ..., C∞}`,
    /// presented as `π_(n-1)⁻¹(Cinf)`, for `n = 1..=depth+1`.
    pub fn chromatic(space: Arc<ProSpace>, depth: usize) -> Result<Self> {
        if !matches!(space.rule(), Rule::ChainGrowth) {
            return Err(Error::Precondition("the chromatic datum needs the chain-growth tower".into()));
        }
        let gens = (1..=depth + 1)
            .map(|n| Ok((format!("g{n}"), space.level_set(n - 1, &[CHAIN_TOP])?)))
            .collect::<Result<Vec<_>>>()?;
        Self::pro(space, gens)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// The poset in which supports are computed.
    pub fn working_poset(&self) -> &FinPoset {
        match &self.ambient {
            Ambient::Finite(x) => x,
            Ambient::Pro(p) => p.level(self.level).expect("working level is materialized"),
        }
    }

    pub fn prospace(&self) -> Option<&Arc<ProSpace>> {
        match &self.ambient {
            Ambient::Pro(p) => Some(p),
            Ambient::Finite(_) => None,
        }
    }

    /// Support of `1`.
    pub fn live(&self) -> &Subset {
        &self.live
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, &Subset)> {
        self.gens.iter().map(|(l, s)| (l.as_str(), s))
    }

    pub fn supp(&self, t: &ObjectTerm) -> Result<Subset> {
        Ok(match t {
            ObjectTerm::Zero => Subset::empty(self.live.universe()),
            ObjectTerm::One => self.live.clone(),
            ObjectTerm::Gen(l) => self
                .gens
                .get(l)
                .cloned()
                .ok_or_else(|| Error::UnassignedGenerator(l.clone()))?,
            ObjectTerm::Susp(a) => self.supp(a)?,
            ObjectTerm::Tensor(a, b) => self.supp(a)?.intersection(&self.supp(b)?),
            ObjectTerm::Sum(a, b) => self.supp(a)?.union(&self.supp(b)?),
        })
    }

    /// `C(k, l) = supp(k) ∩ supp(l)^c`.
    pub fn basic_constructible(&self, k: &ObjectTerm, l: &ObjectTerm) -> Result<Subset> {
        Ok(self.supp(k)?.difference(&self.supp(l)?))
    }

    /// Same set as a level set of the limit.
    pub fn as_level_set(&self, s: &Subset) -> LevelSet {
        LevelSet::new(self.level, s.clone())
    }

    /// Thomason subsets reachable from the generators with `∩` and `∪`.
    pub fn realizable(&self) -> BTreeSet<Subset> {
        lattice_closure(self.gens.values().cloned(), &self.live)
    }

    /// Whether every Thomason subset of the working level is realizable.
    pub fn is_generating(&self) -> bool {
        self.realizable() == live_upsets(self.working_poset(), &self.live)
    }

    /// All terms up to `bound` nodes, one per support.
    pub fn catalog(&self, bound: usize) -> TermCatalog {
        TermCatalog::build(&self.gens, &self.live, bound, self.realizable().len())
    }

    /// Brings a Thomason level set to the working level.
    pub fn at_working_level(&self, c: &LevelSet) -> Result<Subset> {
        let p = self
            .prospace()
            .ok_or_else(|| Error::Precondition("level sets need a limit space".into()))?;
        if !p.is_thomason(c)? {
            return Err(Error::NotThomason);
        }
        let at = if c.level() <= self.level {
            p.lift(c, self.level)?
        } else {
            p.descend(c, self.level)?.ok_or_else(|| {
                Error::Precondition(format!(
                    "set at level {} is not presented at working level {}",
                    c.level(),
                    self.level
                ))
            })?
        };
        Ok(at.members().intersection(&self.live))
    }

    /// Terms of the catalog with support inside the Thomason set `t`.
    pub fn ideal_of_thomason(&self, t: &Subset, bound: usize) -> Result<IdealShadow> {
        if !self.working_poset().is_thomason(t)? {
            return Err(Error::NotThomason);
        }
        let catalog = self.catalog(bound);
        Ok(catalog.ideal(&t.intersection(&self.live)))
    }

    /// Union of the member supports.
    pub fn supp_of_ideal(&self, ideal: &IdealShadow) -> Subset {
        ideal.supp_of_ideal()
    }

    /// Ideal shadows of every realizable Thomason subset.
    pub fn ideal_shadows(&self, bound: usize) -> Vec<IdealShadow> {
        let catalog = self.catalog(bound);
        let mut out: Vec<IdealShadow> = Vec::new();
        let mut seen = BTreeSet::new();
        for t in self.realizable() {
            let ideal = catalog.ideal(&t);
            if seen.insert(ideal.member_indices.clone()) {
                out.push(ideal);
            }
        }
        out
    }

    /// Points of the working level hit by the probe, and a density verdict
    /// for the probe in the whole space.
    fn trace(&self, probe: &Probe) -> Result<(Subset, ProDensity)> {
        match (&self.ambient, probe) {
            (Ambient::Finite(x), Probe::Subset(d)) => {
                x.check_subset(d)?;
                let density = if x.is_patch_dense(d)? {
                    ProDensity::DenseProven { depth: 0 }
                } else {
                    let y = d.complement().iter().next().expect("a non-dense set misses a point");
                    ProDensity::NotDense {
                        witness: LevelSet::new(0, Subset::singleton(x.len(), y)),
                        depth: 0,
                    }
                };
                Ok((d.clone(), density))
            }
            (Ambient::Pro(p), Probe::Family(fam)) => {
                let mut d = Subset::empty(self.live.universe());
                for pt in fam.expand(p, self.level)? {
                    d.insert(pt.resolve(p, self.level)?);
                }
                Ok((d, p.patch_dense_pro(fam, self.level)?))
            }
            (Ambient::Finite(_), Probe::Family(_)) => Err(Error::Precondition(
                "a finite space is probed by a subset".into(),
            )),
            (Ambient::Pro(_), Probe::Subset(_)) => Err(Error::Precondition(
                "a limit space is probed by a family of points".into(),
            )),
        }
    }

    /// Decides whether `fam` jointly distinguishes supports, in two
    /// independent ways, next to the density verdict for its images.
    pub fn distinguishes_supports(&self, fam: &MapFamily, bound: usize) -> Result<DistinguishReport> {
        let probe = fam.probe(self)?;
        let (d, density) = self.trace(&probe)?;
        let catalog = self.catalog(bound);
        let entries = catalog.entries();

        // (A) equal traces on the images force equal supports
        let mut implication_witness = None;
        'a: for (i, (k, sk)) in entries.iter().enumerate() {
            for (l, sl) in &entries[i + 1..] {
                if sk.intersection(&d) == sl.intersection(&d) {
                    implication_witness = Some(if sk.is_subset(sl) {
                        (l.clone(), k.clone())
                    } else {
                        (k.clone(), l.clone())
                    });
                    break 'a;
                }
            }
        }

        // (B) every non-empty C(k, l) meets the images
        let mut basis_witness = None;
        'b: for (k, sk) in entries {
            for (l, sl) in entries {
                let c = sk.difference(sl);
                if !c.is_empty() && !c.meets(&d) {
                    basis_witness = Some((k.clone(), l.clone()));
                    break 'b;
                }
            }
        }

        Ok(DistinguishReport {
            distinguishes: implication_witness.is_none(),
            implication_witness,
            basis_met: basis_witness.is_none(),
            basis_witness,
            density,
            generating: self.is_generating(),
            catalog_complete: catalog.is_complete(),
            bound,
            level: self.level,
            terms: entries.len(),
        })
    }

    /// Injectivity of `I ↦ ∪_{k ∈ I} (D ∩ supp(k))` on ideal shadows, next to
    /// the density verdict for `D`.
    pub fn dense_injectivity_check(&self, probe: &Probe, bound: usize) -> Result<InjectivityReport> {
        let (d, density) = self.trace(probe)?;
        let catalog = self.catalog(bound);
        let ideals = self.ideal_shadows(bound);
        let mut images: HashMap<Subset, usize> = HashMap::new();
        let mut collision = None;
        for (i, ideal) in ideals.iter().enumerate() {
            let image = ideal
                .member_indices
                .iter()
                .fold(Subset::empty(d.universe()), |acc, &m| {
                    acc.union(&catalog.entries[m].1.intersection(&d))
                });
            if let Some(&j) = images.get(&image) {
                collision = Some((ideals[j].clone(), ideal.clone()));
                break;
            }
            images.insert(image, i);
        }
        Ok(InjectivityReport {
            injective: collision.is_none(),
            collision,
            density,
            generating: self.is_generating(),
            catalog_complete: catalog.is_complete(),
            bound,
            level: self.level,
            ideals: ideals.len(),
        })
    }

    /// Rebuilds the space from the supports restricted to a dense probe.
    ///
    /// Finite spaces give one exact level. Limits give one level for each
    /// `n <= depth`, using only the generators presented at level `n`.
    pub fn reconstruct_from_dense(&self, probe: &Probe, bound: usize, depth: usize) -> Result<Reconstruction> {
        let (d, density) = self.trace(probe)?;
        if let ProDensity::NotDense { witness, .. } = &density {
            return Err(Error::Precondition(format!(
                "the probe is not patch-dense: it misses the level-{} set {:?}",
                witness.level(),
                witness.members()
            )));
        }
        if !self.is_generating() {
            return Err(Error::Precondition(
                "generator supports do not generate every Thomason subset".into(),
            ));
        }
        let catalog = self.catalog(bound);
        let levels = match (&self.ambient, probe) {
            (Ambient::Finite(x), _) => {
                let carrier: Vec<usize> = d.iter().collect();
                let labels = carrier.iter().map(|&c| x.id(c).to_string()).collect();
                let supports: Vec<Subset> = catalog.entries.iter().map(|(_, s)| s.clone()).collect();
                vec![rebuild_level(0, x, &self.live, labels, &carrier, &supports)?]
            }
            (Ambient::Pro(p), Probe::Family(fam)) => {
                if depth > self.level {
                    return Err(Error::DepthExceeded {
                        requested: depth,
                        available: self.level,
                    });
                }
                let points = fam.expand(p, self.level)?;
                let labels: Vec<String> = points.iter().map(|q| q.label().to_string()).collect();
                let mut levels = Vec::with_capacity(depth + 1);
                for n in 0..=depth {
                    let live = p.limit_image(n)?;
                    let mut gens = BTreeMap::new();
                    for (label, s) in &self.gens {
                        if let Some(down) = p.descend(&LevelSet::new(self.level, s.clone()), n)? {
                            gens.insert(label.clone(), down.members().intersection(&live));
                        }
                    }
                    let realizable = lattice_closure(gens.values().cloned(), &live);
                    if realizable != live_upsets(p.level(n)?, &live) {
                        return Err(Error::Precondition(format!(
                            "generators presented at level {n} do not generate its Thomason subsets"
                        )));
                    }
                    let level_catalog = TermCatalog::build(&gens, &live, bound, realizable.len());
                    let carrier = points
                        .iter()
                        .map(|q| q.resolve(p, n))
                        .collect::<Result<Vec<_>>>()?;
                    let supports: Vec<Subset> =
                        level_catalog.entries.iter().map(|(_, s)| s.clone()).collect();
                    levels.push(rebuild_level(n, p.level(n)?, &live, labels.clone(), &carrier, &supports)?);
                }
                levels
            }
            _ => unreachable!("trace rejects mismatched probes"),
        };
        Ok(Reconstruction {
            levels,
            catalog_complete: catalog.is_complete(),
            bound,
        })
    }
}

/// Closure of `{D ∩ supp(k)^c}` on the carrier `D` (given by its images
/// `carrier` in `x`), compared with the live part of `x`.
fn rebuild_level(
    level: usize,
    x: &FinPoset,
    live: &Subset,
    labels: Vec<String>,
    carrier: &[usize],
    supports: &[Subset],
) -> Result<LevelReconstruction> {
    let opens: Vec<Subset> = supports
        .iter()
        .map(|s| Subset::from_indices(carrier.len(), (0..carrier.len()).filter(|&c| !s.contains(carrier[c]))))
        .collect();
    let lattice = SetLattice::generate(labels, &opens)?;
    let closure = lattice.spectral_closure();
    let (target, embedding) = x.subposet(live);
    let into_target: Vec<usize> = carrier
        .iter()
        .map(|y| {
            embedding
                .binary_search(y)
                .map_err(|_| Error::Precondition(format!("probe point `{}` is not in the limit", x.id(*y))))
        })
        .collect::<Result<_>>()?;
    let map: SpectralMap = closure.factor(&lattice, &target, &into_target)?;
    check_order_iso(&closure.space, &target, map.assignment())?;
    Ok(LevelReconstruction {
        level,
        iso: map.assignment().to_vec(),
        target,
        lattice,
        closure,
    })
}

/// Terms up to a size bound, one per support, smallest term first.
#[derive(Clone, Debug)]
pub struct TermCatalog {
    entries: Vec<(ObjectTerm, Subset)>,
    complete: bool,
    bound: usize,
}

impl TermCatalog {
    /// Size-by-size enumeration over representatives. A term's support only
    /// depends on the supports of its subterms, so combining the smallest
    /// representatives reaches every support reachable within the bound.
    /// Suspension never changes a support and is skipped.
    fn build(gens: &BTreeMap<String, Subset>, live: &Subset, bound: usize, realizable: usize) -> Self {
        let mut entries: Vec<(ObjectTerm, Subset)> = Vec::new();
        let mut seen: BTreeSet<Subset> = BTreeSet::new();
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); bound + 1];
        let mut push = |t: ObjectTerm, s: Subset, size: usize, entries: &mut Vec<_>, by_size: &mut Vec<Vec<usize>>| {
            if seen.insert(s.clone()) {
                by_size[size].push(entries.len());
                entries.push((t, s));
            }
        };
        if bound >= 1 {
            push(ObjectTerm::Zero, Subset::empty(live.universe()), 1, &mut entries, &mut by_size);
            push(ObjectTerm::One, live.clone(), 1, &mut entries, &mut by_size);
            for (l, s) in gens {
                push(ObjectTerm::gen(l.clone()), s.clone(), 1, &mut entries, &mut by_size);
            }
        }
        for size in 3..=bound {
            for i in 1..=(size - 1) / 2 {
                let j = size - 1 - i;
                for &a in &by_size[i].clone() {
                    for &b in &by_size[j].clone() {
                        let (ta, sa) = entries[a].clone();
                        let (tb, sb) = entries[b].clone();
                        push(
                            ObjectTerm::tensor(ta.clone(), tb.clone()),
                            sa.intersection(&sb),
                            size,
                            &mut entries,
                            &mut by_size,
                        );
                        push(ObjectTerm::sum(ta, tb), sa.union(&sb), size, &mut entries, &mut by_size);
                    }
                }
            }
        }
        TermCatalog {
            complete: entries.len() == realizable,
            entries,
            bound,
        }
    }

    pub fn entries(&self) -> &[(ObjectTerm, Subset)] {
        &self.entries
    }

    /// Every realizable support has a term within the bound.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn ideal(&self, t: &Subset) -> IdealShadow {
        let member_indices: Vec<usize> = (0..self.entries.len())
            .filter(|&i| self.entries[i].1.is_subset(t))
            .collect();
        IdealShadow {
            thomason: t.clone(),
            members: member_indices.iter().map(|&i| self.entries[i].0.clone()).collect(),
            supports: member_indices.iter().map(|&i| self.entries[i].1.clone()).collect(),
            member_indices,
        }
    }
}

/// The terms classified by a Thomason subset: those supported inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealShadow {
    thomason: Subset,
    members: Vec<ObjectTerm>,
    supports: Vec<Subset>,
    member_indices: Vec<usize>,
}

impl IdealShadow {
    pub fn thomason(&self) -> &Subset {
        &self.thomason
    }

    /// Catalog terms with support inside the Thomason subset.
    pub fn members(&self) -> &[ObjectTerm] {
        &self.members
    }

    pub fn contains(&self, t: &ObjectTerm) -> bool {
        self.members.contains(t)
    }

    /// A smallest family of members whose sum has the ideal's support: the
    /// maximal members among those whose support is not a union of strictly
    /// smaller member supports.
    pub fn generators(&self) -> Vec<&ObjectTerm> {
        let n = self.members.len();
        let strictly_below = |i: usize, j: usize| {
            self.supports[i].is_subset(&self.supports[j]) && self.supports[i] != self.supports[j]
        };
        let irreducible: Vec<usize> = (0..n)
            .filter(|&i| {
                let below = (0..n)
                    .filter(|&j| strictly_below(j, i))
                    .fold(Subset::empty(self.thomason.universe()), |acc, j| acc.union(&self.supports[j]));
                below != self.supports[i]
            })
            .collect();
        irreducible
            .iter()
            .filter(|&&i| !irreducible.iter().any(|&j| strictly_below(i, j)))
            .map(|&i| &self.members[i])
            .collect()
    }

    pub fn supp_of_ideal(&self) -> Subset {
        self.supports
            .iter()
            .fold(Subset::empty(self.thomason.universe()), |acc, s| acc.union(s))
    }

    /// `supp_of_ideal` gives back the Thomason subset.
    pub fn round_trip_exact(&self) -> bool {
        self.supp_of_ideal() == self.thomason
    }

    /// Inclusion of member sets.
    pub fn is_subideal(&self, other: &IdealShadow) -> bool {
        self.members.iter().all(|m| other.members.contains(m))
    }
}

/// Maps into the datum's space whose images are tested.
#[derive(Clone, Debug)]
pub enum MapFamily {
    /// Spectral maps into a finite space.
    Finite(Vec<SpectralMap>),
    /// Points of a limit, as section images or explicit resolvers.
    Pro(DenseFamily),
}

impl MapFamily {
    fn probe(&self, d: &SupportDatum) -> Result<Probe> {
        match self {
            MapFamily::Finite(maps) => {
                let x = d.working_poset();
                let mut image = x.empty();
                for m in maps {
                    if m.target() != x {
                        return Err(Error::Precondition("map does not land in the datum's space".into()));
                    }
                    image = image.union(&m.image());
                }
                Ok(Probe::Subset(image))
            }
            MapFamily::Pro(fam) => Ok(Probe::Family(fam.clone())),
        }
    }
}

/// A candidate dense subset.
#[derive(Clone, Debug)]
pub enum Probe {
    Subset(Subset),
    Family(DenseFamily),
}

#[derive(Clone, Debug)]
pub struct DistinguishReport {
    /// (A): equal traces force equal supports, over catalog pairs.
    pub distinguishes: bool,
    /// Terms with different supports and equal traces, `supp(k) ⊄ supp(l)`.
    pub implication_witness: Option<(ObjectTerm, ObjectTerm)>,
    /// (B): every non-empty `C(k, l)` from the catalog meets the images.
    pub basis_met: bool,
    /// A non-empty `C(k, l)` missed by the images.
    pub basis_witness: Option<(ObjectTerm, ObjectTerm)>,
    pub density: ProDensity,
    /// Realizable supports are all Thomason subsets.
    pub generating: bool,
    pub catalog_complete: bool,
    pub bound: usize,
    pub level: usize,
    pub terms: usize,
}

impl DistinguishReport {
    /// (A) and (B) agree, and match density when the catalog reaches every
    /// Thomason subset.
    pub fn agree(&self) -> bool {
        let density_ok = !(self.generating && self.catalog_complete)
            || self.basis_met != self.density.is_refuted();
        self.distinguishes == self.basis_met && density_ok
    }
}

#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub injective: bool,
    /// Two different ideal shadows with the same trace.
    pub collision: Option<(IdealShadow, IdealShadow)>,
    pub density: ProDensity,
    pub generating: bool,
    pub catalog_complete: bool,
    pub bound: usize,
    pub level: usize,
    pub ideals: usize,
}

impl InjectivityReport {
    pub fn agrees_with_density(&self) -> bool {
        self.injective != self.density.is_refuted()
    }
}

/// One rebuilt level: closure of the restricted lattice and its isomorphism
/// onto the live part of the level.
#[derive(Clone, Debug)]
pub struct LevelReconstruction {
    pub level: usize,
    pub lattice: SetLattice,
    pub closure: ClosureResult,
    /// The live part of the level.
    pub target: FinPoset,
    /// Closure point to target point.
    pub iso: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub levels: Vec<LevelReconstruction>,
    pub catalog_complete: bool,
    pub bound: usize,
}
