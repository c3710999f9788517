//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Every randomized check uses a fixed ChaCha seed, so a failure reproduces.

mod common;

use std::fs;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use patchtop::enumerate::{
    posets_up_to_iso, random_generating_supports, random_point_map, random_poset, random_retractable_tower,
    random_subset,
};
use patchtop::lattice::realize_in_ambient;
use patchtop::{
    DenseFamily, Error, FinPoset, MapFamily, PointMap, ProDensity, ProPoint, ProSpace, Probe, Sections, SetLattice,
    SingletonVerdict, SpectralMap, Subset, SupportDatum, Visibility,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0u64..1 << n).map(move |m| Subset::from_mask(n, m))
}

fn dense_epi() -> Check {
    let mut cases = 0;
    for n in 0..=4 {
        for x in posets_up_to_iso(n) {
            for d in all_subsets(n) {
                let r = x.lemma_dense_epi(&PointMap::inclusion(&x, &d)).map_err(|e| e.to_string())?;
                ensure(r.agree() && r.patch_dense == (d == x.full()), || format!("{x:?} {d:?}: {r:?}"))?;
                cases += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..1000 {
        let n = 1 + k % 8;
        let x = random_poset(&mut rng, n, 0.4);
        let i = random_point_map(&mut rng, &x, k % 7);
        let r = x.lemma_dense_epi(&i).map_err(|e| e.to_string())?;
        ensure(r.agree(), || format!("random case {k}: {r:?}"))?;
    }
    Ok(format!("{cases} exhaustive + 1000 random"))
}

fn closure_agreement() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..500 {
        let n = 1 + k % 6;
        let gens: Vec<Subset> = (0..k % 5).map(|_| random_subset(&mut rng, n)).collect();
        let l = SetLattice::generate((0..n).map(|i| format!("p{i}")).collect(), &gens).map_err(|e| e.to_string())?;
        let a = l.spectral_closure();
        let b = l.closure_via_evaluation();
        let iso = a.canonical_iso(&b).map_err(|e| format!("lattice {k}: {e}"))?;
        ensure((0..n).all(|x| iso[a.unit[x]] == b.unit[x]), || format!("lattice {k}: units differ"))?;
        ensure(a.unit_star_is_bijection(&l) && b.unit_star_is_bijection(&l), || {
            format!("lattice {k}: unit* is not a bijection")
        })?;
    }
    Ok("500 lattices".into())
}

fn realization() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..500 {
        let x = random_poset(&mut rng, 1 + k % 7, 0.4);
        let i = random_point_map(&mut rng, &x, k % 6);
        let r = realize_in_ambient(&i, &x).map_err(|e| format!("case {k}: {e}"))?;
        let image = i.image_set(x.len());
        ensure(r.iso.len() == image.len() && r.embedding == image.iter().collect::<Vec<_>>(), || {
            format!("case {k}: realization does not cover the image")
        })?;
    }
    Ok("500 maps".into())
}

fn chromatic_claims() -> Check {
    let depth = 32;
    let x = ProSpace::chromatic(depth);
    let fam = x.retractable_limit(Sections::NextPoint).map_err(|e| e.to_string())?;
    let d = x.patch_dense_pro(&fam, depth).map_err(|e| e.to_string())?;
    ensure(d == ProDensity::DenseProven { depth }, || format!("finite points: {d:?}"))?;
    let inf = x
        .is_constructible_singleton(&ProPoint::chromatic_infinity(), depth)
        .map_err(|e| e.to_string())?;
    ensure(inf == SingletonVerdict::NotConstructibleUpToDepth { depth }, || format!("Cinf: {inf:?}"))?;
    for n in 1..=31 {
        let v = x.is_constructible_singleton(&ProPoint::chromatic(n), depth).map_err(|e| e.to_string())?;
        ensure(matches!(v, SingletonVerdict::Constructible { .. }), || format!("C{n}: {v:?}"))?;
    }
    for n in 1..=31 {
        let rest = DenseFamily::from_points((1..=depth + 1).filter(|&k| k != n).map(ProPoint::chromatic).collect());
        match x.patch_dense_pro(&rest, depth).map_err(|e| e.to_string())? {
            ProDensity::NotDense { witness, .. } => {
                let expected = x.level_set(n + 1, &[format!("C{n}")]).map_err(|e| e.to_string())?;
                let same = x.same_set(&witness, &expected).map_err(|e| e.to_string())?;
                ensure(same, || format!("without C{n}: witness {witness:?}"))?;
            }
            other => return Err(format!("without C{n}: {other:?}")),
        }
    }
    Ok(format!("depth {depth}"))
}

fn retractable_limits() -> Check {
    let chrom = ProSpace::chromatic(32);
    for s in [Sections::NextPoint, Sections::FixTop] {
        let fam = chrom.retractable_limit(s).map_err(|e| e.to_string())?;
        let d = chrom.patch_dense_pro(&fam, 32).map_err(|e| e.to_string())?;
        ensure(d.tag() == "DENSE_PROVEN", || format!("chromatic: {d:?}"))?;
    }
    let broken = Sections::Table(vec![vec![0], vec![1, 1]]);
    ensure(
        matches!(chrom.retractable_limit(broken), Err(Error::NotASection { level: 1, .. })),
        || "broken chromatic sections accepted".into(),
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut rejected = 0;
    for k in 0..20 {
        let (x, s) = random_retractable_tower(&mut rng, 2 + k % 4, 2 + k % 3);
        let depth = x.max_level();
        let fam = x.retractable_limit(s.clone()).map_err(|e| format!("tower {k}: {e}"))?;
        let d = x.patch_dense_pro(&fam, depth).map_err(|e| e.to_string())?;
        ensure(d == ProDensity::DenseProven { depth }, || format!("tower {k}: {d:?}"))?;

        // Send some point to an element projecting elsewhere.
        let Sections::Table(mut maps) = s else { unreachable!() };
        let back = x.transition(0).map_err(|e| e.to_string())?;
        let (p, y) = (0..maps[0].len())
            .flat_map(|p| (0..back.len()).map(move |y| (p, y)))
            .find(|&(p, y)| back[y] != p)
            .ok_or_else(|| format!("tower {k}: level 0 has one point"))?;
        maps[0][p] = y;
        match x.retractable_limit(Sections::Table(maps)) {
            Err(Error::NotASection { level: 0, element, .. }) if element == x.level(0).unwrap().id(p) => {
                rejected += 1
            }
            other => return Err(format!("tower {k}: broken sections gave {other:?}")),
        }
    }
    Ok(format!("chromatic + 20 towers, {rejected} broken sections rejected"))
}

fn visibility() -> Check {
    let x = ProSpace::chromatic(32);
    let fam = x.retractable_limit(Sections::NextPoint).map_err(|e| e.to_string())?;
    let expanded: Vec<String> = fam
        .expand(&x, 16)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| p.label().to_string())
        .collect();
    let mut visible = Vec::new();
    for p in (1..=17).map(ProPoint::chromatic).chain([ProPoint::chromatic_infinity()]) {
        if x.weakly_visible_pro(&p, 32).map_err(|e| e.to_string())?.is_visible() {
            visible.push(p.label().to_string());
        }
    }
    for n in 1..=16 {
        let v = x.weakly_visible_pro(&ProPoint::chromatic(n), 32).map_err(|e| e.to_string())?;
        ensure(matches!(v, Visibility::Visible { .. }), || format!("C{n}: {v:?}"))?;
    }
    let (mut a, mut b) = (visible.clone(), expanded.clone());
    a.sort();
    b.sort();
    ensure(a == b, || format!("visible {visible:?} vs family {expanded:?}"))?;

    let mut spaces = 0;
    for n in 0..=4 {
        for p in posets_up_to_iso(n) {
            let w = p.weakly_visible_points();
            ensure(w == p.full(), || format!("{p:?}: visible {w:?}"))?;
            ensure(p.is_patch_dense(&w).map_err(|e| e.to_string())?, || format!("{p:?}: not dense"))?;
            spaces += 1;
        }
    }
    Ok(format!("C1..C16 visible, {spaces} finite spaces"))
}

fn check_support(d: &SupportDatum, dense: &Subset, bound: usize) -> std::result::Result<(), String> {
    let x = d.working_poset();
    let inclusion =
        SpectralMap::new(x.subposet(dense).0, x.clone(), dense.iter().collect()).map_err(|e| e.to_string())?;
    let r = d
        .distinguishes_supports(&MapFamily::Finite(vec![inclusion]), bound)
        .map_err(|e| e.to_string())?;
    ensure(r.catalog_complete && r.generating && r.agree(), || format!("{x:?} {dense:?}: {r:?}"))?;
    ensure(r.distinguishes == (*dense == x.full()), || format!("{x:?} {dense:?}: wrong verdict"))?;
    let inj = d
        .dense_injectivity_check(&Probe::Subset(dense.clone()), bound)
        .map_err(|e| e.to_string())?;
    ensure(inj.agrees_with_density(), || format!("{x:?} {dense:?}: {inj:?}"))
}

fn support_equivalences() -> Check {
    let bound = 24;
    let mut exhaustive = 0;
    for x in [FinPoset::sierpinski(), FinPoset::chain(2), FinPoset::chain(3)] {
        let ups = x.closed_sets();
        for mask in 0u64..1 << ups.len() {
            let gens: Vec<(String, Subset)> = (0..ups.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (format!("g{i}"), ups[i].clone()))
                .collect();
            let d = SupportDatum::finite(x.clone(), gens).map_err(|e| e.to_string())?;
            if !d.is_generating() {
                continue;
            }
            for dense in all_subsets(x.len()) {
                check_support(&d, &dense, bound)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..200 {
        let x = random_poset(&mut rng, 1 + k % 5, 0.4);
        let gens = random_generating_supports(&mut rng, &x);
        let d = SupportDatum::finite(x.clone(), gens).map_err(|e| e.to_string())?;
        let dense = random_subset(&mut rng, x.len());
        check_support(&d, &dense, bound).map_err(|e| format!("random {k}: {e}"))?;
    }
    Ok(format!("{exhaustive} exhaustive + 200 random, bound {bound}"))
}

fn reconstruction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for k in 0..100 {
        let x = random_poset(&mut rng, 1 + k % 5, 0.4);
        let gens = random_generating_supports(&mut rng, &x);
        let d = SupportDatum::finite(x.clone(), gens).map_err(|e| e.to_string())?;
        let r = d
            .reconstruct_from_dense(&Probe::Subset(x.full()), 24, 0)
            .map_err(|e| format!("datum {k}: {e}"))?;
        let lvl = &r.levels[0];
        ensure(lvl.target == x && lvl.iso.len() == x.len(), || format!("datum {k}: wrong target"))?;
        ensure(
            lvl.closure.space.len() == x.len() && (0..x.len()).all(|p| lvl.iso[lvl.closure.unit[p]] == p),
            || format!("datum {k}: iso does not commute with the unit"),
        )?;
    }
    let depth = 16;
    let x = Arc::new(ProSpace::chromatic(depth));
    let d = SupportDatum::chromatic(x.clone(), depth).map_err(|e| e.to_string())?;
    let fam = x.retractable_limit(Sections::NextPoint).map_err(|e| e.to_string())?;
    let r = d.reconstruct_from_dense(&Probe::Family(fam), 40, depth).map_err(|e| e.to_string())?;
    ensure(r.levels.len() == depth + 1, || format!("{} levels", r.levels.len()))?;
    for (n, lvl) in r.levels.iter().enumerate() {
        ensure(lvl.level == n && &lvl.target == x.level(n).unwrap(), || format!("level {n} differs"))?;
    }
    Ok(format!("100 finite, chromatic levels 0..{depth}"))
}

fn cli_determinism() -> Check {
    for (name, args) in common::CASES {
        let first = common::run(args);
        ensure(first.status.success(), || format!("{name}: {}", String::from_utf8_lossy(&first.stderr)))?;
        let second = common::run(args);
        let golden = fs::read(common::golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(first.stdout == golden, || format!("{name}: differs from golden file"))?;
        ensure(second.stdout == first.stdout, || format!("{name}: differs between runs"))?;
    }
    Ok(format!("{} cases twice", common::CASES.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 density conditions agree", dense_epi, 10),
        ("2 closure algorithms agree", closure_agreement, 10),
        ("3 realization in ambient", realization, 10),
        ("4 chromatic chain claims", chromatic_claims, 5),
        ("5 retractable limits", retractable_limits, 10),
        ("6 weak visibility", visibility, 10),
        ("7 support equivalences", support_equivalences, 20),
        ("8 reconstruction round trip", reconstruction, 10),
        ("9 cli determinism", cli_determinism, 2),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(limit);
        match (outcome, within) {
            (Ok(detail), true) => println!("PASS {name}: {detail} ({:.2}s, limit {limit}s)", elapsed.as_secs_f64()),
            (Ok(detail), false) => {
                failed += 1;
                println!("FAIL {name}: {detail} but took {:.2}s, limit {limit}s", elapsed.as_secs_f64());
            }
            (Err(e), _) => {
                failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 9/9 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 failed");
        ExitCode::FAILURE
    }
}
