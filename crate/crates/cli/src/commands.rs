//! One function per subcommand, each producing a [`Report`].

use std::sync::Arc;

use patchtop::enumerate::{random_point_map, random_poset};
use patchtop::lattice::realize_in_ambient;
use patchtop::{
    DenseFamily, FinPoset, MapFamily, PointMap, ProDensity, ProPoint, ProSpace, Probe, Rule,
    Sections, SetLattice, SingletonVerdict, SpectralMap, Subset, SupportDatum, Visibility,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{self, yes, Report};
use crate::workspace::{ProEntry, SupportEntry, Workspace};
use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub depth: usize,
    pub bound: usize,
    pub seed: u64,
}

fn unknown(kind: &'static str, name: &str) -> CliError {
    CliError::Unknown {
        kind,
        name: name.to_string(),
    }
}

fn poset<'a>(ws: &'a Workspace, name: &str) -> Result<&'a FinPoset, CliError> {
    ws.posets.get(name).ok_or_else(|| unknown("poset", name))
}

fn lattice<'a>(ws: &'a Workspace, name: &str) -> Result<&'a SetLattice, CliError> {
    ws.lattices.get(name).ok_or_else(|| unknown("lattice", name))
}

fn prospace<'a>(ws: &'a Workspace, name: &str) -> Result<&'a ProEntry, CliError> {
    ws.prospaces.get(name).ok_or_else(|| unknown("prospace", name))
}

fn support<'a>(ws: &'a Workspace, name: &str) -> Result<&'a SupportEntry, CliError> {
    ws.supports.get(name).ok_or_else(|| unknown("support", name))
}

fn items(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Comma-separated identifiers; `all` is the whole space unless it names a
/// point.
fn subset(x: &FinPoset, text: &str) -> Result<Subset, CliError> {
    if text.trim() == "all" && x.index_of("all").is_err() {
        return Ok(x.full());
    }
    Ok(x.subset(&items(text))?)
}

/// `C<n>` and `Cinf` on the chain-growth tower, an element on a constant
/// tower, an element of the top level of a table.
fn pro_point(space: &ProSpace, text: &str) -> Result<ProPoint, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not a point of this prospace"));
    match space.rule() {
        Rule::ChainGrowth => {
            if text == patchtop::prospace::CHAIN_TOP {
                return Ok(ProPoint::chromatic_infinity());
            }
            match text.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n >= 1 => Ok(ProPoint::chromatic(n)),
                _ => Err(bad()),
            }
        }
        Rule::Constant(x) => {
            x.index_of(text).map_err(|_| bad())?;
            Ok(ProPoint::constant(text))
        }
        Rule::Table { .. } => {
            let top = space.max_level();
            let x = space.level(top)?.index_of(text).map_err(|_| bad())?;
            let prefix = (0..=top)
                .map(|n| Ok(space.level(n)?.id(space.project(top, n, x)?).to_string()))
                .collect::<Result<Vec<_>, patchtop::Error>>()?;
            Ok(ProPoint::table(text, prefix, None))
        }
    }
}

/// `finite-points`, `sections`, or comma-separated points.
fn family(entry: &ProEntry, text: &str) -> Result<DenseFamily, CliError> {
    let space = &entry.space;
    match text {
        "finite-points" => {
            if !matches!(space.rule(), Rule::ChainGrowth) {
                return Err(CliError::Usage("`finite-points` needs a chain-growth prospace".into()));
            }
            Ok(space.retractable_limit(Sections::NextPoint)?)
        }
        "sections" => {
            let s = entry
                .sections
                .clone()
                .ok_or_else(|| CliError::Usage("this prospace declares no sections".into()))?;
            Ok(space.retractable_limit(s)?)
        }
        _ => Ok(DenseFamily::from_points(
            items(text)
                .into_iter()
                .map(|p| pro_point(space, p))
                .collect::<Result<_, _>>()?,
        )),
    }
}

fn terms(ts: &[impl std::fmt::Display]) -> String {
    if ts.is_empty() {
        "none".into()
    } else {
        ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
    }
}

pub fn dual(ws: &Workspace, s: Settings, space: &str) -> Result<Report, CliError> {
    let x = poset(ws, space)?;
    let d = x.hochster_dual();
    let mut r = Report::new("dual", s.depth, s.bound);
    r.push("space", space);
    r.push("points", report::points(&d));
    r.push("covers", report::covers(&d));
    r.push("closed_points", report::set(&d, &d.closed_points()));
    r.push("involution", yes(d.hochster_dual() == *x));
    Ok(r)
}

pub fn thomason(ws: &Workspace, s: Settings, space: &str, text: Option<&str>) -> Result<Report, CliError> {
    let x = poset(ws, space)?;
    let mut r = Report::new("thomason", s.depth, s.bound);
    r.push("space", space);
    match text {
        Some(text) => {
            let t = subset(x, text)?;
            r.push("subset", report::set(x, &t));
            let closed = x.is_thomason(&t)?;
            r.push("thomason", yes(closed));
            if !closed {
                let (a, b) = t
                    .iter()
                    .find_map(|a| x.up(a).difference(&t).iter().next().map(|b| (a, b)))
                    .expect("a non-closed set has an escaping specialization");
                r.push("witness", format!("{} ~> {} leaves the set", x.id(a), x.id(b)));
            }
        }
        None => {
            let all = x.closed_sets();
            r.push("count", all.len());
            for (i, u) in all.iter().enumerate() {
                r.push(format!("thomason[{i}]"), report::set(x, u));
            }
        }
    }
    Ok(r)
}

pub fn dense(ws: &Workspace, s: Settings, space: &str, text: &str) -> Result<Report, CliError> {
    let x = poset(ws, space)?;
    let d = subset(x, text)?;
    let mut r = Report::new("dense", s.depth, s.bound);
    r.push("space", space);
    r.push("subset", report::set(x, &d));
    let dense = x.is_patch_dense(&d)?;
    r.push("patch_dense", yes(dense));
    if let Some(y) = d.complement().iter().next() {
        r.push("missed_constructible", report::set(x, &Subset::singleton(x.len(), y)));
    }
    Ok(r)
}

pub fn lemma_dense_epi(
    ws: &Workspace,
    s: Settings,
    space: Option<&str>,
    text: Option<&str>,
    random: Option<usize>,
) -> Result<Report, CliError> {
    let mut r = Report::new("lemma-dense-epi", s.depth, s.bound);
    match (space, random) {
        (Some(space), None) => {
            let x = poset(ws, space)?;
            let d = subset(x, text.unwrap_or("all"))?;
            let v = x.lemma_dense_epi(&PointMap::inclusion(x, &d))?;
            r.push("space", space);
            r.push("subset", report::set(x, &d));
            r.push("patch_dense", yes(v.patch_dense));
            r.push("opens_reflected", yes(v.opens_reflected));
            r.push("sierpinski_epi", yes(v.sierpinski_epi));
            r.push("agree", yes(v.agree()));
        }
        (None, Some(cases)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
            let (mut agreed, mut dense) = (0, 0);
            for _ in 0..cases {
                let n = 1 + (rng.next_u32() % 8) as usize;
                let x = random_poset(&mut rng, n, 0.4);
                let m = (rng.next_u32() % (n as u32 + 2)) as usize;
                let v = x.lemma_dense_epi(&random_point_map(&mut rng, &x, m))?;
                agreed += usize::from(v.agree());
                dense += usize::from(v.patch_dense);
            }
            r.push("seed", s.seed);
            r.push("cases", cases);
            r.push("dense_cases", dense);
            r.push("agreeing_cases", agreed);
            r.push("agree", yes(agreed == cases));
        }
        _ => return Err(CliError::Usage("give either --space or --random".into())),
    }
    Ok(r)
}

fn closure_lines(r: &mut Report, l: &SetLattice, c: &patchtop::ClosureResult) {
    r.push("points", c.space.ids().join(", "));
    r.push("covers", report::covers(&c.space));
    for (x, id) in l.carrier().iter().enumerate() {
        r.push(format!("unit[{id}]"), c.space.id(c.unit[x]));
    }
    r.push("separates_points", yes(l.separates_points()));
    r.push("unit_injective", yes(c.unit_is_injective()));
}

pub fn closure(ws: &Workspace, s: Settings, name: &str) -> Result<Report, CliError> {
    let l = lattice(ws, name)?;
    let c = l.spectral_closure();
    let mut r = Report::new("closure", s.depth, s.bound);
    r.push("lattice", name);
    r.push("carrier", l.carrier().join(", "));
    r.push("elements", l.len());
    closure_lines(&mut r, l, &c);
    Ok(r)
}

pub fn closure_ev(ws: &Workspace, s: Settings, name: &str) -> Result<Report, CliError> {
    let l = lattice(ws, name)?;
    let ev = l.closure_via_evaluation();
    let ji = l.spectral_closure();
    let mut r = Report::new("closure-ev", s.depth, s.bound);
    r.push("lattice", name);
    r.push("carrier", l.carrier().join(", "));
    let coords: Vec<String> = l.elements().iter().map(|e| format!("{{{}}}", l.names(e).join(", "))).collect();
    r.push("coordinates", coords.join(" "));
    closure_lines(&mut r, l, &ev);
    let iso = ev.canonical_iso(&ji)?;
    r.push("matches_join_irreducibles", "true");
    for (p, q) in iso.iter().enumerate() {
        r.push(format!("iso[{}]", ev.space.id(p)), ji.space.id(*q));
    }
    Ok(r)
}

/// `p->a,q->b`: fresh domain points and their images.
fn point_map(x: &FinPoset, text: &str) -> Result<PointMap, CliError> {
    let mut domain = Vec::new();
    let mut images = Vec::new();
    for item in items(text) {
        let (d, y) = item
            .split_once("->")
            .ok_or_else(|| CliError::Usage(format!("expected `point->element`, found `{item}`")))?;
        domain.push(d.trim().to_string());
        images.push(x.index_of(y.trim())?);
    }
    Ok(PointMap::new(domain, images)?)
}

pub fn realize(
    ws: &Workspace,
    s: Settings,
    space: &str,
    text: Option<&str>,
    map: Option<&str>,
) -> Result<Report, CliError> {
    let x = poset(ws, space)?;
    let i = match (text, map) {
        (Some(text), None) => PointMap::inclusion(x, &subset(x, text)?),
        (None, Some(map)) => point_map(x, map)?,
        _ => return Err(CliError::Usage("give either --subset or --map".into())),
    };
    let real = realize_in_ambient(&i, x)?;
    let mut r = Report::new("realize", s.depth, s.bound);
    r.push("space", space);
    r.push("image", report::set(x, &i.image_set(x.len())));
    r.push("closure_points", real.closure.space.ids().join(", "));
    r.push("closure_covers", report::covers(&real.closure.space));
    for (p, q) in real.iso.iter().enumerate() {
        r.push(format!("iso[{}]", real.closure.space.id(p)), real.image.id(*q));
    }
    r.push("realized", "true");
    Ok(r)
}

fn effective_depth(space: &ProSpace, s: Settings) -> usize {
    s.depth.min(space.max_level())
}

pub fn pro_dense(ws: &Workspace, s: Settings, space: &str, text: &str) -> Result<Report, CliError> {
    let entry = prospace(ws, space)?;
    let depth = effective_depth(&entry.space, s);
    let fam = family(entry, text)?;
    let members: Vec<String> = fam
        .expand(&entry.space, depth)?
        .iter()
        .map(|p| p.label().to_string())
        .collect();
    let verdict = entry.space.patch_dense_pro(&fam, depth)?;
    let mut r = Report::new("pro-dense", depth, s.bound);
    r.push("space", space);
    r.push("family", text);
    r.push("members_up_to_depth", members.join(", "));
    r.push("verdict", report::density(Some(&entry.space), &verdict));
    Ok(r)
}

pub fn visible(ws: &Workspace, s: Settings, space: &str, point: &str) -> Result<Report, CliError> {
    if let Some(x) = ws.posets.get(space) {
        if ws.prospaces.contains_key(space) {
            return Err(CliError::Usage(format!("`{space}` names both a poset and a prospace")));
        }
        let p = x.index_of(point)?;
        let mut r = Report::new("visible", s.depth, s.bound);
        r.push("space", space);
        r.push("point", point);
        match x.weak_visibility_witness(p) {
            Some((v, w)) => {
                r.push("verdict", "VISIBLE");
                r.push("v", report::set(x, &v));
                r.push("w", report::set(x, &w));
            }
            None => r.push("verdict", "NOT_VISIBLE"),
        }
        return Ok(r);
    }
    let entry = prospace(ws, space)?;
    let depth = effective_depth(&entry.space, s);
    let p = pro_point(&entry.space, point)?;
    let mut r = Report::new("visible", depth, s.bound);
    r.push("space", space);
    r.push("point", point);
    match entry.space.weakly_visible_pro(&p, depth)? {
        Visibility::Visible { v, w } => {
            r.push("verdict", "VISIBLE");
            r.push("v", report::level_set(&entry.space, &v));
            r.push("w", report::level_set(&entry.space, &w));
        }
        Visibility::NotVisibleUpToDepth { depth } => {
            r.push("verdict", format!("NOT_VISIBLE_UP_TO_DEPTH {depth}"));
        }
    }
    Ok(r)
}

pub fn singleton(ws: &Workspace, s: Settings, space: &str, point: &str) -> Result<Report, CliError> {
    if let Some(x) = ws.posets.get(space) {
        let p = x.index_of(point)?;
        let single = Subset::singleton(x.len(), p);
        let mut r = Report::new("singleton", s.depth, s.bound);
        r.push("space", space);
        r.push("point", point);
        r.push("verdict", format!("CONSTRUCTIBLE {}", report::set(x, &single)));
        return Ok(r);
    }
    let entry = prospace(ws, space)?;
    let depth = effective_depth(&entry.space, s);
    let p = pro_point(&entry.space, point)?;
    let mut r = Report::new("singleton", depth, s.bound);
    r.push("space", space);
    r.push("point", point);
    match entry.space.is_constructible_singleton(&p, depth)? {
        SingletonVerdict::Constructible { witness } => {
            r.push("verdict", format!("CONSTRUCTIBLE {}", report::level_set(&entry.space, &witness)));
        }
        SingletonVerdict::NotConstructibleUpToDepth { depth } => {
            r.push("verdict", format!("NOT_CONSTRUCTIBLE_UP_TO_DEPTH {depth}"));
        }
    }
    Ok(r)
}

/// The probe named by `text`: points of a finite space, or a family of
/// points of a limit.
fn probe(ws: &Workspace, entry: &SupportEntry, text: &str) -> Result<Probe, CliError> {
    match entry.datum.prospace() {
        None => Ok(Probe::Subset(subset(entry.datum.working_poset(), text)?)),
        Some(_) => Ok(Probe::Family(family(prospace(ws, &entry.space)?, text)?)),
    }
}

fn shown(d: &SupportDatum, s: &Subset) -> String {
    match d.prospace() {
        Some(p) => report::level_set(p, &d.as_level_set(s)),
        None => report::set(d.working_poset(), s),
    }
}

fn scope(r: &mut Report, generating: bool, complete: bool) {
    r.push("generating", yes(generating));
    r.push("catalog_complete", yes(complete));
    r.push(
        "scope",
        if generating {
            "all Thomason subsets"
        } else {
            "relative to the realizable sublattice"
        },
    );
}

pub fn distinguish(ws: &Workspace, s: Settings, name: &str, text: &str) -> Result<Report, CliError> {
    let entry = support(ws, name)?;
    let d = &entry.datum;
    let fam = match probe(ws, entry, text)? {
        Probe::Subset(sub) => {
            let x = d.working_poset();
            let (sub_poset, embedding) = x.subposet(&sub);
            MapFamily::Finite(vec![SpectralMap::new(sub_poset, x.clone(), embedding)?])
        }
        Probe::Family(f) => MapFamily::Pro(f),
    };
    let rep = d.distinguishes_supports(&fam, s.bound)?;
    let inj = d.dense_injectivity_check(
        &match &fam {
            MapFamily::Finite(m) => Probe::Subset(m[0].image()),
            MapFamily::Pro(f) => Probe::Family(f.clone()),
        },
        s.bound,
    )?;
    let mut r = Report::new("distinguish", rep.level, s.bound);
    r.push("support", name);
    r.push("family", text);
    r.push("terms", rep.terms);
    r.push("distinguishes", yes(rep.distinguishes));
    if let Some((k, l)) = &rep.implication_witness {
        r.push("implication_witness", format!("{k}, {l}"));
    }
    r.push("basis_met", yes(rep.basis_met));
    if let Some((k, l)) = &rep.basis_witness {
        r.push("basis_witness", format!("C({k}, {l}) = {}", shown(d, &d.basic_constructible(k, l)?)));
    }
    r.push("patch_dense", report::density(d.prospace().map(|p| &**p), &rep.density));
    r.push("injective_on_ideals", yes(inj.injective));
    if let Some((a, b)) = &inj.collision {
        r.push(
            "collision",
            format!("{} and {}", shown(d, a.thomason()), shown(d, b.thomason())),
        );
    }
    scope(&mut r, rep.generating, rep.catalog_complete);
    r.push("agree", yes(rep.agree() && inj.agrees_with_density()));
    Ok(r)
}

pub fn classify(
    ws: &Workspace,
    s: Settings,
    name: &str,
    text: Option<&str>,
    level: Option<usize>,
) -> Result<Report, CliError> {
    let entry = support(ws, name)?;
    let d = &entry.datum;
    let mut r = Report::new("classify", d.level(), s.bound);
    r.push("support", name);
    match text {
        Some(text) => {
            let t = match (d.prospace(), level) {
                (None, None) => subset(d.working_poset(), text)?,
                (Some(p), Some(n)) => {
                    let c = patchtop::LevelSet::new(n, subset(p.level(n)?, text)?);
                    d.at_working_level(&c)?
                }
                (None, Some(_)) => return Err(CliError::Usage("--level needs a prospace datum".into())),
                (Some(_), None) => return Err(CliError::Usage("give --level for a prospace datum".into())),
            };
            let ideal = d.ideal_of_thomason(&t, s.bound)?;
            r.push("thomason", shown(d, ideal.thomason()));
            r.push("members", terms(ideal.members()));
            r.push("generated_by", terms(&ideal.generators()));
            r.push("supp_of_ideal", shown(d, &ideal.supp_of_ideal()));
            r.push("round_trip_exact", yes(ideal.round_trip_exact()));
        }
        None => {
            let ideals = d.ideal_shadows(s.bound);
            r.push("ideals", ideals.len());
            for (i, ideal) in ideals.iter().enumerate() {
                r.push(
                    format!("ideal[{i}]"),
                    format!("{} generated by {}", shown(d, ideal.thomason()), terms(&ideal.generators())),
                );
            }
            scope(&mut r, d.is_generating(), d.catalog(s.bound).is_complete());
        }
    }
    Ok(r)
}

pub fn reconstruct(ws: &Workspace, s: Settings, name: &str, text: &str) -> Result<Report, CliError> {
    let entry = support(ws, name)?;
    let d = &entry.datum;
    let depth = s.depth.min(d.level());
    let rec = d.reconstruct_from_dense(&probe(ws, entry, text)?, s.bound, depth)?;
    let mut r = Report::new("reconstruct", depth, s.bound);
    r.push("support", name);
    r.push("dense", text);
    r.push("catalog_complete", yes(rec.catalog_complete));
    for lvl in &rec.levels {
        let table: Vec<String> = lvl
            .iso
            .iter()
            .enumerate()
            .map(|(p, q)| format!("{} -> {}", lvl.closure.space.id(p), lvl.target.id(*q)))
            .collect();
        r.push(format!("iso[{}]", lvl.level), table.join(", "));
    }
    r.push("recovered_levels", rec.levels.len());
    Ok(r)
}

pub fn demo_chromatic(s: Settings) -> Result<Report, CliError> {
    let depth = s.depth.max(1);
    let space = Arc::new(ProSpace::chromatic(depth));
    let mut r = Report::new("demo chromatic", depth, s.bound);
    r.push("space", "C1 ~> C2 ~> ... ~> Cinf");
    r.push(
        format!("level[{depth}]"),
        space.level(depth)?.ids().join(" ~> "),
    );

    let finite = space.retractable_limit(Sections::NextPoint)?;
    let verdict = space.patch_dense_pro(&finite, depth)?;
    r.push("finite_points", report::density(Some(&space), &verdict));
    let top_only = DenseFamily::from_points(vec![ProPoint::chromatic_infinity()]);
    r.push(
        "closed_point_alone",
        report::density(Some(&space), &space.patch_dense_pro(&top_only, depth)?),
    );

    let mut points: Vec<ProPoint> = (1..=depth).map(ProPoint::chromatic).collect();
    points.push(ProPoint::chromatic_infinity());
    for p in &points {
        let single = match space.is_constructible_singleton(p, depth)? {
            SingletonVerdict::Constructible { witness } => {
                format!("CONSTRUCTIBLE {}", report::level_set(&space, &witness))
            }
            SingletonVerdict::NotConstructibleUpToDepth { depth } => {
                format!("NOT_CONSTRUCTIBLE_UP_TO_DEPTH {depth}")
            }
        };
        r.push(format!("singleton[{}]", p.label()), single);
    }
    for p in &points {
        let vis = match space.weakly_visible_pro(p, depth)? {
            Visibility::Visible { v, w } => format!(
                "VISIBLE v={} w={}",
                report::level_set(&space, &v),
                report::level_set(&space, &w)
            ),
            Visibility::NotVisibleUpToDepth { depth } => format!("NOT_VISIBLE_UP_TO_DEPTH {depth}"),
        };
        r.push(format!("visible[{}]", p.label()), vis);
    }
    for n in 1..=depth {
        let rest = (1..=depth + 1)
            .filter(|&k| k != n)
            .map(ProPoint::chromatic)
            .collect();
        let v = space.patch_dense_pro(&DenseFamily::from_points(rest), depth)?;
        r.push(format!("without[C{n}]"), report::density(Some(&space), &v));
    }

    let datum = SupportDatum::chromatic(Arc::clone(&space), depth)?;
    let fam = MapFamily::Pro(finite.clone());
    let rep = datum.distinguishes_supports(&fam, s.bound)?;
    r.push("distinguishes_supports", yes(rep.distinguishes));
    r.push("basis_met", yes(rep.basis_met));
    let inj = datum.dense_injectivity_check(&Probe::Family(finite.clone()), s.bound)?;
    r.push("injective_on_ideals", yes(inj.injective));
    let rec = datum.reconstruct_from_dense(&Probe::Family(finite), s.bound, depth)?;
    let recovered = rec
        .levels
        .iter()
        .filter(|l| l.target == *space.level(l.level).expect("level exists"))
        .count();
    r.push("reconstructed_levels", format!("{recovered} of {}", depth + 1));
    if let ProDensity::DenseProven { .. } = verdict {
        r.push("summary", "finite points are patch-dense; {Cinf} is not constructible up to depth");
    }
    Ok(r)
}
