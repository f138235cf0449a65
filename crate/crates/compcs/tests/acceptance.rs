//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::time::Instant;

use compcs::io;
use compcs::pipeline::{self, build_graph, classify, cliques, compare, ent_image, indices_of, name_set, with_threads};
use compcs_core::composites::{composite_spider, enumerate_composites, underlying_basis, CompositeCS, EntConfig};
use compcs_core::constituents::{constituent_spider, y_spider_via_cz, Constituent};
use compcs_core::names::{build_test_set, Name};
use compcs_core::search::Mode;
use compcs_core::zx::{catalog, verify_rule};
use compcs_core::{ExactScalar, Tensor};

const TWO_QUBIT_SETS: usize = 13;
const THREE_QUBIT_SETS: usize = 32_448;
const P2_SIZE: usize = 12;
const GEN2: usize = 18;
const GEN3: usize = 470;
const PASS3: usize = 251;
const PAIRS2: usize = 153;
const PAIRS3: usize = 23_220;
const MIN_MUTATIONS: usize = 10;
const SHADOW_TOL: f64 = 1e-9;
const SHADOW_SAMPLES: usize = 1000;
const TWO_QUBIT_SECONDS: f64 = 1.0;
const THREE_QUBIT_SECONDS: f64 = 300.0;

fn golden() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, name: &str, pass: bool, detail: String) {
        if !pass {
            self.failed += 1;
        }
        println!("{} {}: {}", if pass { "PASS" } else { "FAIL" }, name, detail);
    }
}

fn sizes(cl: &[compcs_core::search::Clique]) -> BTreeMap<usize, usize> {
    pipeline::size_histogram(cl)
}

fn describe(h: &BTreeMap<usize, usize>) -> String {
    h.iter().rev().map(|(s, k)| format!("{} of size {}", io::thousands(*k), s)).collect::<Vec<_>>().join(", ")
}

fn two_qubit(r: &mut Report) {
    let start = Instant::now();
    let g = with_threads(Some(1), || build_graph(2, Mode::Semantic));
    let cl = with_threads(Some(1), || cliques(&g));
    let secs = start.elapsed().as_secs_f64();
    let fixture: BTreeSet<BTreeSet<Name>> =
        io::read_name_sets(&golden().join("sets2.json")).unwrap().into_iter().map(|s| s.into_iter().collect()).collect();
    let found: BTreeSet<BTreeSet<Name>> = cl.iter().map(|c| name_set(&g, &c.members)).collect();
    let all_five = cl.iter().all(|c| c.members.len() == 5);
    let pass = cl.len() == TWO_QUBIT_SETS && all_five && found == fixture && secs < TWO_QUBIT_SECONDS;
    let complete: BTreeSet<BTreeSet<Name>> =
        cl.iter().filter(|c| c.members.len() == 5).map(|c| name_set(&g, &c.members)).collect();
    r.line(
        "two-qubit reproduction",
        pass,
        format!(
            "{} maximal cliques ({}); size-5 sets equal the listing: {}; {:.3}s",
            cl.len(),
            describe(&sizes(&cl)),
            complete == fixture,
            secs
        ),
    );
}

fn three_qubit(r: &mut Report) {
    let start = Instant::now();
    let g = with_threads(Some(1), || build_graph(3, Mode::Semantic));
    let cl = with_threads(Some(1), || cliques(&g));
    let secs = start.elapsed().as_secs_f64();
    let allowed: BTreeSet<[usize; 3]> = [[3, 0, 6], [2, 3, 4], [1, 6, 2], [0, 9, 0]].into();
    let nine: Vec<_> = cl.iter().filter(|c| c.members.len() == 9).collect();
    let configs_ok = nine.iter().all(|c| allowed.contains(&c.config.triple()));
    let pass = cl.len() == THREE_QUBIT_SETS && nine.len() == cl.len() && configs_ok && secs < THREE_QUBIT_SECONDS;
    let by_config: Vec<String> =
        pipeline::config_summary(nine.iter().copied()).iter().map(|(c, k)| format!("{} {}", c, io::thousands(*k))).collect();
    r.line(
        "three-qubit reproduction",
        pass,
        format!(
            "expected {} of size 9, found {} maximal cliques ({}); size-9 configurations [{}] all allowed: {}; {:.2}s",
            io::thousands(THREE_QUBIT_SETS),
            io::thousands(cl.len()),
            describe(&sizes(&cl)),
            by_config.join(", "),
            configs_ok,
            secs
        ),
    );
}

fn agreement(r: &mut Report) {
    let mut details = Vec::new();
    let mut pass = true;
    for (n, pairs) in [(2, PAIRS2), (3, PAIRS3)] {
        let a = build_graph(n, Mode::Semantic);
        let b = build_graph(n, Mode::Names);
        let c = compare(&a, &b);
        pass &= c.pairs == pairs && c.disagreements.is_empty() && a.matrix_bytes() == b.matrix_bytes();
        details.push(format!("N={}: {} pairs, {} disagreements", n, io::thousands(c.pairs), c.disagreements.len()));
    }
    r.line("pipeline agreement", pass, details.join("; "));
}

fn intermediate(r: &mut Report) {
    let p2: BTreeSet<Name> = io::read_names(&golden().join("p2.json")).unwrap().into_iter().collect();
    let t2 = build_test_set(2);
    let t3 = build_test_set(3);
    let ours: BTreeSet<Name> = t2.generators.entangled.iter().filter(|g| g.passes).map(|g| g.name.clone()).collect();
    let gen2 = t2.generators.entangled.len();
    let gen3 = t3.generators.entangled.len();
    let pass3 = t3.generators.passing();
    let pass = p2.len() == P2_SIZE && ours == p2 && gen2 == GEN2 && gen3 == GEN3 && pass3 == PASS3;
    r.line(
        "intermediate counts",
        pass,
        format!(
            "P2 {} vs {} listed ({} shared); generators N=2 {} vs {}; N=3 {} vs {}; passing N=3 {} vs {}",
            ours.len(),
            p2.len(),
            ours.intersection(&p2).count(),
            gen2,
            GEN2,
            gen3,
            GEN3,
            pass3,
            PASS3
        ),
    );
}

fn zx(r: &mut Report) {
    let rules = catalog();
    let holding = rules.iter().filter(|x| verify_rule(x.id).map(|v| v.holds_up_to_scalar).unwrap_or(false)).count();
    let caught = pipeline::mutation_report().iter().filter(|m| m.detected).count();
    r.line(
        "ZX rule suite",
        holding == rules.len() && caught >= MIN_MUTATIONS,
        format!("{} of {} rules hold; {} mutations detected (need {})", holding, rules.len(), caught, MIN_MUTATIONS),
    );
}

fn y_equivalence(r: &mut Report) {
    let mut checked = 0;
    let mut ok = 0;
    for m in 0..=4 {
        for n in 0..=4 - m {
            if m + n == 0 {
                continue;
            }
            checked += 1;
            let a = y_spider_via_cz(m, n).unwrap();
            let b = constituent_spider(Constituent::Y, m, n).unwrap();
            ok += a.is_proportional(&b).unwrap() as usize;
        }
    }
    r.line("Y equivalence", ok == checked, format!("{} of {} arities proportional", ok, checked));
}

fn ent(r: &mut Report) {
    let dir = golden();
    let eg = io::read_names(&dir.join("eg090.json")).unwrap();
    let f1: BTreeSet<Name> = io::read_names(&dir.join("eg090_ent1.json")).unwrap().into_iter().collect();
    let f21: BTreeSet<Name> = io::read_names(&dir.join("eg090_ent2_ent1.json")).unwrap().into_iter().collect();
    let g = build_graph(3, Mode::Semantic);
    let check = |image: &[Name], fixture: &BTreeSet<Name>, want: EntConfig| -> (bool, String) {
        let listed = image.iter().cloned().collect::<BTreeSet<_>>() == *fixture;
        let ix = indices_of(&g, image).filter(|ix| g.is_maximal_clique(ix));
        let config = ix.map(|ix| classify(&g, &ix));
        (listed && config == Some(want), format!("listing matches {}, configuration {:?}", listed, config.map(|c| c.to_string())))
    };
    let i1 = ent_image(&eg, 0).unwrap();
    let i21 = ent_image(&i1, 1).unwrap();
    let (a, da) = check(&i1, &f1, EntConfig { n_sc: 2, n_bs: 3, n_ns: 4 });
    let (b, db) = check(&i21, &f21, EntConfig { n_sc: 1, n_bs: 6, n_ns: 2 });
    r.line("ent_m golden", a && b, format!("ent_1: {}; ent_2 ent_1: {}", da, db));
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

fn shadow_sample(rng: &mut Lcg) -> f64 {
    let pick = |rng: &mut Lcg| -> ExactScalar {
        let v = [(1, 0, 0, 0, 0), (-1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 1), (0, 0, 0, 1, 1), (1, 0, 0, 0, 1), (0, 0, 0, 0, 0)];
        let (a, b, c, d, k) = v[rng.next() as usize % v.len()];
        ExactScalar::new(a, b, c, d, k)
    };
    let q = 1 + rng.next() as usize % 2;
    let dim = 1 << q;
    let a = Tensor::from_fn(q, q, |_, _| pick(rng));
    let b = Tensor::from_fn(q, q, |_, _| pick(rng));
    let c = Tensor::from_fn(0, q, |_, _| pick(rng));
    let exact = c.then(&a).then(&b.dagger()).kron(&c).to_f64();
    let (fa, fb, fc) = (a.to_f64(), b.to_f64(), c.to_f64());
    let m = |x: (f64, f64), y: (f64, f64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
    let mut v = vec![(0.0, 0.0); dim];
    for (r, slot) in v.iter_mut().enumerate() {
        for k in 0..dim {
            let p = m(fa[r * dim + k], fc[k]);
            *slot = (slot.0 + p.0, slot.1 + p.1);
        }
    }
    let mut w = vec![(0.0, 0.0); dim];
    for (r, slot) in w.iter_mut().enumerate() {
        for k in 0..dim {
            let bd = fb[k * dim + r];
            let p = m((bd.0, -bd.1), v[k]);
            *slot = (slot.0 + p.0, slot.1 + p.1);
        }
    }
    let mut err: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let want = m(w[i], fc[j]);
            let got = exact[i * dim + j];
            err = err.max((got.0 - want.0).abs()).max((got.1 - want.1).abs());
        }
    }
    err
}

fn properties(r: &mut Report) {
    let mut all: Vec<CompositeCS> = enumerate_composites(2);
    all.extend(enumerate_composites(3));
    let orthonormal = all.iter().filter(|cs| underlying_basis(cs).is_orthonormal()).count();

    let mut edges = 0;
    let mut flat = 0;
    for n in [2, 3] {
        let g = build_graph(n, Mode::Semantic);
        let bases: Vec<_> = g.vertices.iter().map(underlying_basis).collect();
        let target = ExactScalar::pow2_inv(n as u32);
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if g.adjacent(i, j) {
                    edges += 1;
                    let ok = bases[i].kets.iter().all(|v| bases[j].kets.iter().all(|w| v.inner(w).norm_sqr() == target));
                    flat += ok as usize;
                }
            }
        }
    }

    let mut fused = 0;
    let mut sampled = 0;
    for cs in all.iter().step_by(7) {
        let lim = if cs.n() == 2 { 2 } else { 1 };
        for m in 1..=lim {
            for n in 1..=lim {
                sampled += 1;
                let a = composite_spider(cs, m, 1).unwrap();
                let b = composite_spider(cs, 1, n).unwrap();
                fused += a.then(&b).is_proportional(&composite_spider(cs, m, n).unwrap()).unwrap() as usize;
            }
        }
    }

    let mut rng = Lcg(0x5eed);
    let worst = (0..SHADOW_SAMPLES).map(|_| shadow_sample(&mut rng)).fold(0.0, f64::max);

    let pass = orthonormal == 234 && all.len() == 234 && flat == edges && fused == sampled && worst < SHADOW_TOL;
    r.line(
        "property suites",
        pass,
        format!(
            "{} of {} bases orthonormal; {} of {} edges with overlaps 1/2^N; {} of {} sampled fusions; float shadow max error {:.1e} over {} tensors",
            orthonormal,
            all.len(),
            io::thousands(flat),
            io::thousands(edges),
            fused,
            sampled,
            worst,
            SHADOW_SAMPLES
        ),
    );
}

fn main() {
    let mut r = Report { failed: 0 };
    two_qubit(&mut r);
    three_qubit(&mut r);
    agreement(&mut r);
    intermediate(&mut r);
    zx(&mut r);
    y_equivalence(&mut r);
    ent(&mut r);
    properties(&mut r);
    println!("{} of 8 criteria failed", r.failed);
    if r.failed > 0 {
        std::process::exit(1);
    }
}
