//! Sequential inverse limits of finite posets.
//!
//! A [`ProSpace`] is a tower `X_0 ← X_1 ← X_2 ← ...` of finite spectral
//! spaces along monotone transition maps `p_n: X_{n+1} → X_n`. Its limit is a
//! spectral space whose quasi-compact opens are all pulled back from finite
//! levels, so constructible sets are represented as [`LevelSet`]s: a level `n`
//! and a subset `S` of `X_n`, standing for `π_n⁻¹(S)`.
//!
//! Questions about infinitely many levels are answered with three-way
//! verdicts: proven (by a structural argument valid at every level), checked
//! up to a depth, or refuted with an explicit witness.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::finspace::{FinPoset, SpectralMap, Subset};
use crate::{Error, Result};

/// Working depth used when none is given.
pub const DEFAULT_DEPTH: usize = 32;

/// Name of the collapsed top point at every level of the chain-growth tower.
pub const CHAIN_TOP: &str = "Cinf";

/// Recipe producing the levels and transitions of a tower.
#[derive(Clone, Debug)]
pub enum Rule {
    /// Every level is the given poset and every transition is the identity.
    Constant(FinPoset),
    /// Level `n` is the chain `C1 ⇝ C2 ⇝ ... ⇝ Cn ⇝ Cinf`; the transition to
    /// level `n` sends `C(n+1)` and `Cinf` to `Cinf` and fixes the rest.
    ChainGrowth,
    /// Explicit finite tower; `transitions[n]` maps level `n+1` to level `n`.
    Table {
        levels: Vec<FinPoset>,
        transitions: Vec<Vec<usize>>,
    },
}

#[derive(Debug)]
struct Level {
    poset: FinPoset,
    // p_{n-1}: this level -> previous one
    down: Option<Vec<usize>>,
}

/// A sequential limit of finite posets, materialized up to its working depth.
pub struct ProSpace {
    rule: Rule,
    depth: usize,
    // Filled on first use; safe for concurrent readers.
    levels: Vec<OnceLock<Level>>,
}

impl fmt::Debug for ProSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match &self.rule {
            Rule::Constant(_) => "constant",
            Rule::ChainGrowth => "chain-growth",
            Rule::Table { .. } => "table",
        };
        f.debug_struct("ProSpace")
            .field("rule", &rule)
            .field("depth", &self.depth)
            .field("max_level", &self.max_level())
            .finish()
    }
}

fn chain_level_ids(n: usize) -> Vec<String> {
    (1..=n)
        .map(|k| format!("C{k}"))
        .chain(std::iter::once(CHAIN_TOP.to_string()))
        .collect()
}

impl ProSpace {
    /// Validates the rule up to the working depth (the whole table for
    /// [`Rule::Table`]).
    pub fn new(rule: Rule, depth: usize) -> Result<Self> {
        let count = match &rule {
            Rule::Table {
                levels,
                transitions,
            } => {
                if levels.is_empty() {
                    return Err(Error::Precondition("a table needs at least one level".into()));
                }
                if transitions.len() + 1 != levels.len() {
                    return Err(Error::Precondition(format!(
                        "{} levels need {} transitions, got {}",
                        levels.len(),
                        levels.len() - 1,
                        transitions.len()
                    )));
                }
                levels.len()
            }
            _ => depth + 1,
        };
        let space = ProSpace {
            rule,
            depth,
            levels: (0..count).map(|_| OnceLock::new()).collect(),
        };
        for n in 0..space.max_level() {
            let upper = space.level(n + 1)?.clone();
            let lower = space.level(n)?.clone();
            SpectralMap::new(upper, lower, space.transition(n)?.to_vec())?;
        }
        Ok(space)
    }

    /// The chain-growth tower, whose limit is the chain `C1 ⇝ C2 ⇝ ... ⇝ C∞`.
    pub fn chromatic(depth: usize) -> Self {
        Self::new(Rule::ChainGrowth, depth).expect("chain-growth transitions are monotone")
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Deepest level that can be queried.
    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// The limit equals its top level: a finite table or a constant tower.
    pub fn is_finite_tower(&self) -> bool {
        !matches!(self.rule, Rule::ChainGrowth)
    }

    fn build_level(&self, n: usize) -> Level {
        match &self.rule {
            Rule::Constant(p) => Level {
                poset: p.clone(),
                down: (n > 0).then(|| (0..p.len()).collect()),
            },
            Rule::ChainGrowth => Level {
                poset: FinPoset::chain_of(&chain_level_ids(n)),
                // C1..C(n-1) fixed, Cn and Cinf collapse onto Cinf (index n-1)
                down: (n > 0).then(|| (0..n).chain(std::iter::once(n - 1)).collect()),
            },
            Rule::Table {
                levels,
                transitions,
            } => Level {
                poset: levels[n].clone(),
                down: (n > 0).then(|| transitions[n - 1].clone()),
            },
        }
    }

    fn materialize(&self, n: usize) -> Result<&Level> {
        let cell = self.levels.get(n).ok_or(Error::DepthExceeded {
            requested: n,
            available: self.max_level(),
        })?;
        Ok(cell.get_or_init(|| self.build_level(n)))
    }

    pub fn level(&self, n: usize) -> Result<&FinPoset> {
        Ok(&self.materialize(n)?.poset)
    }

    /// `p_n`: level `n+1` → level `n`.
    pub fn transition(&self, n: usize) -> Result<&[usize]> {
        let lvl = self.materialize(n + 1)?;
        let down = lvl.down.as_deref().expect("levels above 0 have transitions");
        if down.len() != lvl.poset.len() {
            return Err(Error::NotTotal(format!("transition {n} has the wrong length")));
        }
        if let Some(&y) = down.iter().find(|&&y| y >= self.materialize(n).map_or(0, |l| l.poset.len())) {
            return Err(Error::NotTotal(format!("transition {n} sends a point to #{y}")));
        }
        Ok(down)
    }

    /// Composite `p_{m,n}` applied to `x` at level `m`.
    pub fn project(&self, m: usize, n: usize, x: usize) -> Result<usize> {
        if m < n {
            return Err(Error::LiftBelowLevel { from: n, to: m });
        }
        let mut x = x;
        for k in (n..m).rev() {
            x = self.transition(k)?[x];
        }
        Ok(x)
    }

    /// Points of level `n` that are projections of points of the limit.
    pub fn limit_image(&self, n: usize) -> Result<Subset> {
        let size = self.level(n)?.len();
        match &self.rule {
            Rule::Table { .. } => {
                let top = self.max_level();
                let mut s = Subset::empty(size);
                for x in 0..self.level(top)?.len() {
                    s.insert(self.project(top, n, x)?);
                }
                Ok(s)
            }
            _ => Ok(Subset::full(size)),
        }
    }

    /// Whether `π_n⁻¹({y})` is a single point of the limit.
    pub fn fiber_is_singleton(&self, n: usize, y: usize) -> Result<bool> {
        let size = self.level(n)?.len();
        if y >= size {
            return Err(Error::UnknownElement(format!("#{y} at level {n}")));
        }
        match &self.rule {
            Rule::Constant(_) => Ok(true),
            // Only the collapsed top point has a growing fiber.
            Rule::ChainGrowth => Ok(y + 1 != size),
            Rule::Table { .. } => {
                let top = self.max_level();
                let mut count = 0;
                for x in 0..self.level(top)?.len() {
                    if self.project(top, n, x)? == y {
                        count += 1;
                    }
                }
                Ok(count == 1)
            }
        }
    }

    pub fn level_set<S: AsRef<str>>(&self, n: usize, members: &[S]) -> Result<LevelSet> {
        Ok(LevelSet {
            level: n,
            members: self.level(n)?.subset(members)?,
        })
    }

    fn check_level_set(&self, c: &LevelSet) -> Result<()> {
        self.level(c.level)?.check_subset(&c.members)
    }

    /// Same subset of the limit, presented at level `m >= c.level`.
    pub fn lift(&self, c: &LevelSet, m: usize) -> Result<LevelSet> {
        self.check_level_set(c)?;
        if m < c.level {
            return Err(Error::LiftBelowLevel { from: c.level, to: m });
        }
        let size = self.level(m)?.len();
        let mut members = Subset::empty(size);
        for x in 0..size {
            if c.members.contains(self.project(m, c.level, x)?) {
                members.insert(x);
            }
        }
        Ok(LevelSet { level: m, members })
    }

    /// Presents `c` at a lower level `n`, if it is pulled back from there.
    pub fn descend(&self, c: &LevelSet, n: usize) -> Result<Option<LevelSet>> {
        self.check_level_set(c)?;
        if n > c.level {
            return self.lift(c, n).map(Some);
        }
        let live = self.limit_image(c.level)?;
        let mut members = Subset::empty(self.level(n)?.len());
        for x in c.members.intersection(&live).iter() {
            members.insert(self.project(c.level, n, x)?);
        }
        let candidate = LevelSet { level: n, members };
        let back = self.lift(&candidate, c.level)?;
        Ok((back.members.intersection(&live) == c.members.intersection(&live)).then_some(candidate))
    }

    /// Both sets, lifted to their common level, with non-limit points removed.
    fn align(&self, a: &LevelSet, b: &LevelSet) -> Result<(usize, Subset, Subset)> {
        let m = a.level.max(b.level);
        let live = self.limit_image(m)?;
        let a = self.lift(a, m)?.members.intersection(&live);
        let b = self.lift(b, m)?.members.intersection(&live);
        Ok((m, a, b))
    }

    /// Equality as subsets of the limit.
    pub fn same_set(&self, a: &LevelSet, b: &LevelSet) -> Result<bool> {
        let (_, a, b) = self.align(a, b)?;
        Ok(a == b)
    }

    pub fn is_nonempty(&self, c: &LevelSet) -> Result<bool> {
        self.check_level_set(c)?;
        Ok(c.members.meets(&self.limit_image(c.level)?))
    }

    pub fn meet(&self, a: &LevelSet, b: &LevelSet) -> Result<LevelSet> {
        let (level, a, b) = self.align(a, b)?;
        Ok(LevelSet { level, members: a.intersection(&b) })
    }

    pub fn join(&self, a: &LevelSet, b: &LevelSet) -> Result<LevelSet> {
        let (level, a, b) = self.align(a, b)?;
        Ok(LevelSet { level, members: a.union(&b) })
    }

    pub fn minus(&self, a: &LevelSet, b: &LevelSet) -> Result<LevelSet> {
        let (level, a, b) = self.align(a, b)?;
        Ok(LevelSet { level, members: a.difference(&b) })
    }

    /// Level-wise up-set check.
    pub fn is_thomason(&self, c: &LevelSet) -> Result<bool> {
        self.check_level_set(c)?;
        Ok(self.level(c.level)?.is_closed(&c.members))
    }

    /// Checks `p_k(resolve(k+1)) = resolve(k)` for all `k < upto`.
    pub fn check_point(&self, p: &ProPoint, upto: usize) -> Result<()> {
        let mut below = p.resolve(self, 0)?;
        for k in 0..upto {
            let here = p.resolve(self, k + 1)?;
            if self.transition(k)?[here] != below {
                return Err(Error::IncompatiblePoint {
                    point: p.label.clone(),
                    level: k + 1,
                });
            }
            below = here;
        }
        Ok(())
    }

    /// Whether the point lies in the limit subset presented by `c`.
    pub fn member(&self, p: &ProPoint, c: &LevelSet) -> Result<bool> {
        self.check_level_set(c)?;
        self.check_point(p, c.level)?;
        Ok(c.members.contains(p.resolve(self, c.level)?))
    }

    /// `s_n`: level `n` → level `n+1`.
    pub fn section_map(&self, sections: &Sections, n: usize) -> Result<Vec<usize>> {
        let size = self.level(n)?.len();
        self.level(n + 1)?;
        let map = match (sections, &self.rule) {
            (Sections::Table(maps), _) => maps
                .get(n)
                .cloned()
                .ok_or(Error::DepthExceeded {
                    requested: n,
                    available: maps.len().saturating_sub(1),
                })?,
            (Sections::FixTop, Rule::ChainGrowth) => (0..n).chain(std::iter::once(n + 1)).collect(),
            (Sections::NextPoint, Rule::ChainGrowth) => (0..=n).collect(),
            (Sections::Identity, Rule::Constant(_)) => (0..size).collect(),
            _ => {
                return Err(Error::Precondition(
                    "built-in sections do not match this tower's rule".into(),
                ))
            }
        };
        Ok(map)
    }

    /// Checks every available `s_n` is monotone with `p_n ∘ s_n = id`.
    /// Returns whether the sections are known at every level of the tower.
    pub fn validate_sections(&self, sections: &Sections) -> Result<bool> {
        let (checked, complete) = match (sections, &self.rule) {
            (Sections::Table(maps), Rule::Table { .. }) => {
                let n = maps.len().min(self.max_level());
                (n, n == self.max_level())
            }
            (Sections::Table(maps), _) => (maps.len().min(self.max_level()), false),
            _ => (self.max_level(), true),
        };
        for n in 0..checked {
            let lower = self.level(n)?;
            let upper = self.level(n + 1)?;
            let s = self.section_map(sections, n)?;
            if s.len() != lower.len() {
                return Err(Error::NotASection {
                    level: n,
                    element: lower.ids().get(s.len()).cloned().unwrap_or_default(),
                    reason: "has no image".into(),
                });
            }
            let back = self.transition(n)?;
            for (x, &y) in s.iter().enumerate() {
                if y >= upper.len() {
                    return Err(Error::NotASection {
                        level: n,
                        element: lower.id(x).to_string(),
                        reason: "is sent outside the next level".into(),
                    });
                }
                if back[y] != x {
                    return Err(Error::NotASection {
                        level: n,
                        element: lower.id(x).to_string(),
                        reason: format!(
                            "goes to `{}`, which projects back to `{}`",
                            upper.id(y),
                            lower.id(back[y])
                        ),
                    });
                }
            }
            if let Err(Error::NotMonotone { from_lo, to_lo, .. }) =
                SpectralMap::new(lower.clone(), upper.clone(), s)
            {
                return Err(Error::NotASection {
                    level: n,
                    element: from_lo,
                    reason: format!("breaks monotonicity (image `{to_lo}`)"),
                });
            }
        }
        Ok(complete)
    }

    /// The section images `σ_n(x)` for all levels `n` and points `x`, as a
    /// family. Fails with a counterexample if the maps are not sections.
    pub fn retractable_limit(&self, sections: Sections) -> Result<DenseFamily> {
        let all_levels = self.validate_sections(&sections)?;
        Ok(DenseFamily {
            points: Vec::new(),
            generators: vec![SectionGenerator {
                sections: Arc::new(sections),
                all_levels,
            }],
        })
    }

    pub fn section_image(&self, sections: &Arc<Sections>, level: usize, x: usize) -> Result<ProPoint> {
        let lvl = self.level(level)?;
        if x >= lvl.len() {
            return Err(Error::UnknownElement(format!("#{x} at level {level}")));
        }
        let label = match (&**sections, &self.rule) {
            (Sections::FixTop, Rule::ChainGrowth) => lvl.id(x).to_string(),
            (Sections::NextPoint, Rule::ChainGrowth) if x == level => format!("C{}", level + 1),
            (Sections::NextPoint, Rule::ChainGrowth) => lvl.id(x).to_string(),
            (Sections::Identity, Rule::Constant(_)) => lvl.id(x).to_string(),
            _ => format!("s{level}({})", lvl.id(x)),
        };
        Ok(ProPoint {
            label,
            resolver: Resolver::SectionImage {
                level,
                element: x,
                sections: Arc::clone(sections),
            },
        })
    }

    /// Density verdict for a family of points of the limit.
    pub fn patch_dense_pro(&self, family: &DenseFamily, depth: usize) -> Result<ProDensity> {
        if depth > self.max_level() {
            return Err(Error::DepthExceeded {
                requested: depth,
                available: self.max_level(),
            });
        }
        let points = family.expand(self, depth)?;
        if family.generators.iter().any(|g| g.all_levels) {
            // π_n ∘ σ_n = id: every level is covered by its own section images.
            return Ok(ProDensity::DenseProven { depth });
        }
        for n in 0..=depth {
            let mut covered = Subset::empty(self.level(n)?.len());
            for p in &points {
                covered.insert(p.resolve(self, n)?);
            }
            if let Some(y) = self.limit_image(n)?.difference(&covered).iter().next() {
                return Ok(ProDensity::NotDense {
                    witness: LevelSet {
                        level: n,
                        members: Subset::singleton(covered.universe(), y),
                    },
                    depth,
                });
            }
        }
        // In a finite tower the top level is the whole limit.
        if self.is_finite_tower() && depth == self.max_level() {
            Ok(ProDensity::DenseProven { depth })
        } else {
            Ok(ProDensity::DenseUpToDepth { depth })
        }
    }

    /// Searches levels up to `depth` for Thomason `V`, `W` with `{p} = V \ W`.
    ///
    /// At a level `n` where `p` resolves to `y`, any level-`n` difference of
    /// up-sets containing `p` contains all of `π_n⁻¹(y)`, and
    /// `V = up(y)`, `W = up(y) \ {y}` realizes exactly that fiber. So a
    /// witness exists at level `n` iff the fiber is a single point.
    pub fn weakly_visible_pro(&self, p: &ProPoint, depth: usize) -> Result<Visibility> {
        let depth = depth.min(self.max_level());
        self.check_point(p, depth)?;
        for n in 0..=depth {
            let y = p.resolve(self, n)?;
            if self.fiber_is_singleton(n, y)? {
                let lvl = self.level(n)?;
                let v = lvl.up(y).clone();
                let mut w = v.clone();
                w.remove(y);
                return Ok(Visibility::Visible {
                    v: LevelSet { level: n, members: v },
                    w: LevelSet { level: n, members: w },
                });
            }
        }
        Ok(Visibility::NotVisibleUpToDepth { depth })
    }

    /// Whether `{p}` is presented by some level set at a level `<= depth`.
    pub fn is_constructible_singleton(&self, p: &ProPoint, depth: usize) -> Result<SingletonVerdict> {
        let depth = depth.min(self.max_level());
        self.check_point(p, depth)?;
        for n in 0..=depth {
            let y = p.resolve(self, n)?;
            if self.fiber_is_singleton(n, y)? {
                return Ok(SingletonVerdict::Constructible {
                    witness: LevelSet {
                        level: n,
                        members: Subset::singleton(self.level(n)?.len(), y),
                    },
                });
            }
        }
        Ok(SingletonVerdict::NotConstructibleUpToDepth { depth })
    }
}

/// The subset `π_level⁻¹(members)` of a limit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelSet {
    level: usize,
    members: Subset,
}

impl LevelSet {
    pub fn new(level: usize, members: Subset) -> Self {
        LevelSet { level, members }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn members(&self) -> &Subset {
        &self.members
    }
}

/// Per-level maps `s_n: X_n → X_{n+1}` meant to satisfy `p_n ∘ s_n = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sections {
    /// Explicit maps for the first levels; `maps[n]` is `s_n`.
    Table(Vec<Vec<usize>>),
    /// Chain growth: `Cinf ↦ Cinf`, other points fixed.
    FixTop,
    /// Chain growth: `Cinf ↦ C(n+1)`, other points fixed. Its images are
    /// exactly the finite points.
    NextPoint,
    /// Constant tower: identity maps.
    Identity,
}

#[derive(Clone, Debug)]
enum Resolver {
    Table {
        prefix: Vec<String>,
        tail: Option<String>,
    },
    SectionImage {
        level: usize,
        element: usize,
        sections: Arc<Sections>,
    },
}

/// A point of a limit, given by a rule picking an element at every level.
#[derive(Clone, Debug)]
pub struct ProPoint {
    label: String,
    resolver: Resolver,
}

impl ProPoint {
    /// Element `prefix[n]` at level `n`, then `tail` at every deeper level.
    pub fn table(label: impl Into<String>, prefix: Vec<String>, tail: Option<String>) -> Self {
        ProPoint {
            label: label.into(),
            resolver: Resolver::Table { prefix, tail },
        }
    }

    /// The same element at every level.
    pub fn constant(id: &str) -> Self {
        Self::table(id, Vec::new(), Some(id.to_string()))
    }

    /// `C_n` of the chain-growth tower (`n >= 1`).
    pub fn chromatic(n: usize) -> Self {
        Self::table(
            format!("C{n}"),
            vec![CHAIN_TOP.to_string(); n],
            Some(format!("C{n}")),
        )
    }

    /// `C_∞`, the closed point of the chain-growth tower.
    pub fn chromatic_infinity() -> Self {
        Self::constant(CHAIN_TOP)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Element of level `n` this point projects to.
    pub fn resolve(&self, space: &ProSpace, n: usize) -> Result<usize> {
        match &self.resolver {
            Resolver::Table { prefix, tail } => {
                let name = prefix.get(n).or(tail.as_ref()).ok_or(Error::DepthExceeded {
                    requested: n,
                    available: prefix.len().saturating_sub(1),
                })?;
                space
                    .level(n)?
                    .index_of(name)
                    .map_err(|_| Error::IncompatiblePoint {
                        point: self.label.clone(),
                        level: n,
                    })
            }
            Resolver::SectionImage {
                level,
                element,
                sections,
            } => {
                if n <= *level {
                    space.project(*level, n, *element)
                } else {
                    let mut x = *element;
                    for k in *level..n {
                        x = space.section_map(sections, k)?[x];
                    }
                    Ok(x)
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct SectionGenerator {
    sections: Arc<Sections>,
    // validated at every level of the tower
    all_levels: bool,
}

/// Points of a limit, listed explicitly or generated level by level from
/// validated sections.
#[derive(Clone, Debug, Default)]
pub struct DenseFamily {
    points: Vec<ProPoint>,
    generators: Vec<SectionGenerator>,
}

impl DenseFamily {
    pub fn from_points(points: Vec<ProPoint>) -> Self {
        DenseFamily {
            points,
            generators: Vec::new(),
        }
    }

    pub fn points(&self) -> &[ProPoint] {
        &self.points
    }

    /// Whether a generator's sections are known to be valid at every level.
    pub fn has_proven_generator(&self) -> bool {
        self.generators.iter().any(|g| g.all_levels)
    }

    pub fn merged(mut self, other: DenseFamily) -> Self {
        self.points.extend(other.points);
        self.generators.extend(other.generators);
        self
    }

    /// Explicit points followed by section images up to `depth`, with
    /// duplicates (same element at every level up to `depth`) removed.
    pub fn expand(&self, space: &ProSpace, depth: usize) -> Result<Vec<ProPoint>> {
        let depth = depth.min(space.max_level());
        let mut candidates = self.points.clone();
        for g in &self.generators {
            for n in 0..=depth {
                for x in 0..space.level(n)?.len() {
                    candidates.push(space.section_image(&g.sections, n, x)?);
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for p in candidates {
            space.check_point(&p, depth)?;
            let trace = (0..=depth)
                .map(|n| p.resolve(space, n))
                .collect::<Result<Vec<_>>>()?;
            if seen.insert(trace) {
                out.push(p);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProDensity {
    /// Dense at every level, by section coverage or a complete finite check.
    DenseProven { depth: usize },
    /// Every non-empty level set up to `depth` is met.
    DenseUpToDepth { depth: usize },
    /// `witness` is non-empty in the limit and missed by the family.
    NotDense { witness: LevelSet, depth: usize },
}

impl ProDensity {
    pub fn tag(&self) -> &'static str {
        match self {
            ProDensity::DenseProven { .. } => "DENSE_PROVEN",
            ProDensity::DenseUpToDepth { .. } => "DENSE_UP_TO_DEPTH",
            ProDensity::NotDense { .. } => "NOT_DENSE",
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, ProDensity::NotDense { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Visibility {
    Visible { v: LevelSet, w: LevelSet },
    NotVisibleUpToDepth { depth: usize },
}

impl Visibility {
    pub fn is_visible(&self) -> bool {
        matches!(self, Visibility::Visible { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingletonVerdict {
    Constructible { witness: LevelSet },
    NotConstructibleUpToDepth { depth: usize },
}
