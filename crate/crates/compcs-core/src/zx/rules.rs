use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{green, red, Cap, Cup, Diagram, Generator, Hadamard, Phase, Star, Swap, Wire};
use crate::kernel::ExactScalar;

/// One catalogued equation, checked on a finite list of concrete instances.
#[derive(Clone, Debug)]
pub struct Rule {
    pub id: &'static str,
    pub title: &'static str,
    /// Scalar equations are compared exactly rather than up to a scalar.
    pub scalar_only: bool,
    pub instances: Vec<(Diagram, Diagram)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds_up_to_scalar: bool,
    pub scalar: Option<ExactScalar>,
    pub instances: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownRule;

impl fmt::Display for UnknownRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown rule id")
    }
}

const P0: Phase = Phase::ZERO;
const PI: Phase = Phase::PI;
const HALF: Phase = Phase::PLUS_HALF;
const MHALF: Phase = Phase::MINUS_HALF;

fn d(layers: Vec<Vec<Generator>>) -> Diagram {
    Diagram::from_layers(layers)
}

fn wires(n: usize) -> Vec<Generator> {
    vec![Wire; n]
}

fn row(parts: &[&[Generator]]) -> Vec<Generator> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Colour {
    G,
    R,
}

impl Colour {
    fn spider(self, ins: usize, outs: usize, phase: Phase) -> Generator {
        match self {
            Colour::G => green(ins, outs, phase),
            Colour::R => red(ins, outs, phase),
        }
    }

    fn other(self) -> Colour {
        match self {
            Colour::G => Colour::R,
            Colour::R => Colour::G,
        }
    }
}

/// Controlled-Z between adjacent wires `p, p+1` of an `n`-wire register.
pub(crate) fn cz_adjacent(n: usize, p: usize) -> Diagram {
    let pre = wires(p);
    let post = wires(n - p - 2);
    d(vec![
        row(&[&pre, &[green(1, 2, P0), green(1, 2, P0)], &post]),
        row(&[&pre, &[Wire, Hadamard, Wire, Wire], &post]),
        row(&[&pre, &[Wire, Cap, Wire], &post]),
    ])
}

/// Controlled-Z between any two wires, routed with swaps.
pub(crate) fn cz_between(n: usize, p: usize, q: usize) -> Diagram {
    let (p, q) = if p < q { (p, q) } else { (q, p) };
    if q == p + 1 {
        return cz_adjacent(n, p);
    }
    // move wire q next to p, apply, move it back
    let mut perm: Vec<usize> = (0..n).collect();
    perm[q] = p + 1;
    for (w, slot) in perm.iter_mut().enumerate() {
        if w > p && w < q {
            *slot = w + 1;
        }
    }
    let mut inv = vec![0; n];
    for (w, &t) in perm.iter().enumerate() {
        inv[t] = w;
    }
    Diagram::permutation(&perm).then(cz_adjacent(n, p)).then(Diagram::permutation(&inv))
}

/// All pairwise controlled-Z gates among `n` wires.
pub(crate) fn cz_cascade(n: usize) -> Diagram {
    let mut out = Diagram::wires(n);
    for p in 0..n {
        for q in p + 1..n {
            out = out.then(cz_between(n, p, q));
        }
    }
    out
}

fn fuse(c: Colour) -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for m1 in 0..=2 {
        for j in 0..=1 {
            for m2 in 0..=1 {
                for n in 0..=2 {
                    if m1 + m2 > 3 || j + n > 3 {
                        continue;
                    }
                    for a in Phase::ALL {
                        for b in Phase::ALL {
                            let lhs = d(vec![
                                row(&[&[c.spider(m1, 1 + j, a)], &wires(m2)]),
                                row(&[&wires(j), &[c.spider(1 + m2, n, b)]]),
                            ]);
                            let rhs = Diagram::single(c.spider(m1 + m2, j + n, a.plus(b)));
                            out.push((lhs, rhs));
                        }
                    }
                }
            }
        }
    }
    out
}

fn fuse_double(c: Colour) -> Vec<(Diagram, Diagram)> {
    // two spiders joined by a pair of plain wires fuse and leave a loop behind
    let mut out = Vec::new();
    for a in Phase::ALL {
        for b in Phase::ALL {
            let lhs = d(vec![vec![c.spider(1, 2, a)], vec![c.spider(2, 1, b)]]);
            let rhs = d(vec![vec![c.spider(1, 3, a.plus(b))], vec![Wire, Cap]]);
            out.push((lhs, rhs));
        }
    }
    out
}

fn loops(c: Colour, had: bool) -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for m in 0..=2 {
        for n in 0..=1 {
            for a in Phase::ALL {
                let mut lhs = d(vec![vec![c.spider(m, n + 2, a)]]);
                if had {
                    lhs = lhs.layer(row(&[&wires(n), &[Hadamard, Wire]]));
                }
                lhs = lhs.layer(row(&[&wires(n), &[Cap]]));
                let phase = if had { a.plus(PI) } else { a };
                out.push((lhs, Diagram::single(c.spider(m, n, phase))));
            }
        }
    }
    out
}

fn cups(c: Colour) -> Vec<(Diagram, Diagram)> {
    vec![
        (Diagram::single(c.spider(0, 2, P0)), Diagram::single(Cup)),
        (Diagram::single(c.spider(2, 0, P0)), Diagram::single(Cap)),
    ]
}

fn pi_copy(c: Colour) -> Vec<(Diagram, Diagram)> {
    let o = c.other();
    let mut out = Vec::new();
    for n in 0..=3 {
        for a in Phase::ALL {
            let lhs = d(vec![vec![o.spider(1, 1, PI)], vec![c.spider(1, n, a)]]);
            let mut rhs = Diagram::single(c.spider(1, n, a.neg()));
            if n > 0 {
                rhs = rhs.layer(vec![o.spider(1, 1, PI); n]);
            }
            out.push((lhs, rhs));
        }
    }
    out
}

fn copy(c: Colour) -> Vec<(Diagram, Diagram)> {
    let o = c.other();
    let mut out = Vec::new();
    for n in 0..=3 {
        for a in [P0, PI] {
            let lhs = d(vec![vec![o.spider(0, 1, a)], vec![c.spider(1, n, P0)]]);
            let rhs = if n == 0 { Diagram::new() } else { Diagram::from_layers(vec![vec![o.spider(0, 1, a); n]]) };
            out.push((lhs, rhs));
        }
    }
    out
}

fn bialgebra() -> Vec<(Diagram, Diagram)> {
    vec![gen_bialg(2, 2)]
}

/// Complete bipartite graph between `m` green (1,n) spiders and `n` red (m,1) spiders.
fn gen_bialg(m: usize, n: usize) -> (Diagram, Diagram) {
    // wire g*n + r goes from green g to red r; red r wants inputs g = 0..m
    let perm: Vec<usize> = (0..m * n).map(|w| (w % n) * m + w / n).collect();
    let lhs = Diagram::from_layers(vec![vec![green(1, n, P0); m]])
        .then(Diagram::permutation(&perm))
        .layer(vec![red(m, 1, P0); n]);
    let rhs = d(vec![vec![red(m, 1, P0)], vec![green(1, n, P0)]]);
    (lhs, rhs)
}

fn colour_change() -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for m in 0..=2 {
        for n in 0..=2 {
            for a in Phase::ALL {
                let mut lhs = Diagram::new();
                if m > 0 {
                    lhs = lhs.layer(vec![Hadamard; m]);
                }
                lhs = lhs.layer(vec![green(m, n, a)]);
                if n > 0 {
                    lhs = lhs.layer(vec![Hadamard; n]);
                }
                out.push((lhs, Diagram::single(red(m, n, a))));
            }
        }
    }
    out
}

fn euler() -> Vec<(Diagram, Diagram)> {
    [HALF, MHALF]
        .iter()
        .map(|&a| {
            (d(vec![vec![green(1, 1, a)], vec![red(1, 1, a)], vec![green(1, 1, a)]]), Diagram::single(Hadamard))
        })
        .collect()
}

fn zero_disconnect() -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for c in [Colour::G, Colour::R] {
        let lhs = d(vec![vec![c.spider(0, 0, PI), Wire]]);
        let rhs = d(vec![vec![c.spider(0, 0, PI), green(1, 0, P0)], vec![green(0, 1, P0)]]);
        out.push((lhs, rhs));
    }
    out
}

fn star_scalar() -> Vec<(Diagram, Diagram)> {
    vec![
        (d(vec![vec![Star, green(0, 0, HALF), green(0, 0, MHALF)]]), Diagram::new()),
        (d(vec![vec![Star, red(0, 0, HALF), red(0, 0, MHALF)]]), Diagram::new()),
    ]
}

fn zero_scalar() -> Vec<(Diagram, Diagram)> {
    vec![
        (d(vec![vec![green(0, 1, P0)], vec![green(1, 0, PI)]]), Diagram::single(green(0, 0, PI))),
        (d(vec![vec![green(0, 0, PI), red(0, 0, HALF)]]), Diagram::single(green(0, 0, PI))),
        (d(vec![vec![green(0, 0, PI), Star]]), Diagram::single(red(0, 0, PI))),
    ]
}

fn hopf() -> Vec<(Diagram, Diagram)> {
    vec![
        (d(vec![vec![green(1, 2, P0)], vec![red(2, 1, P0)]]), d(vec![vec![green(1, 0, P0)], vec![red(0, 1, P0)]])),
        (d(vec![vec![red(1, 2, P0)], vec![green(2, 1, P0)]]), d(vec![vec![red(1, 0, P0)], vec![green(0, 1, P0)]])),
    ]
}

fn yank() -> Vec<(Diagram, Diagram)> {
    vec![
        (d(vec![vec![Wire, Cup], vec![Cap, Wire]]), Diagram::wires(1)),
        (d(vec![vec![Cup, Wire], vec![Wire, Cap]]), Diagram::wires(1)),
    ]
}

fn identity() -> Vec<(Diagram, Diagram)> {
    vec![
        (Diagram::single(green(1, 1, P0)), Diagram::wires(1)),
        (Diagram::single(red(1, 1, P0)), Diagram::wires(1)),
    ]
}

fn star_inverse() -> Vec<(Diagram, Diagram)> {
    vec![
        (d(vec![vec![Star, green(0, 0, P0)]]), Diagram::new()),
        (d(vec![vec![Star, red(0, 0, P0)]]), Diagram::new()),
    ]
}

fn had_unitary() -> Vec<(Diagram, Diagram)> {
    vec![(d(vec![vec![Hadamard], vec![Hadamard]]), Diagram::wires(1))]
}

fn hopf_had(c: Colour) -> Vec<(Diagram, Diagram)> {
    vec![(
        d(vec![vec![c.spider(1, 2, P0)], vec![Hadamard, Hadamard], vec![c.spider(2, 1, P0)]]),
        d(vec![vec![c.spider(1, 0, P0)], vec![c.spider(0, 1, P0)]]),
    )]
}

fn gen_bialg_instances(m: usize, n: usize) -> Vec<(Diagram, Diagram)> {
    vec![gen_bialg(m, n)]
}

/// The phase-free 𝒴 spider with `m` inputs and one output.
pub(crate) fn y_cz_m1(m: usize) -> Diagram {
    cz_cascade(m).layer(vec![red(m, 1, P0)])
}

fn y_equiv_1() -> Vec<(Diagram, Diagram)> {
    let rhs = d(vec![vec![green(1, 1, MHALF), green(1, 1, MHALF)], vec![red(2, 1, P0)], vec![green(1, 1, HALF)]]);
    vec![(y_cz_m1(2), rhs)]
}

fn y_equiv_2() -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for m in 2..=3 {
        for leg in 0..m {
            let mut pre = y_cz_m1(2).beside(&Diagram::wires(m - 1));
            // route the merged output to input `leg` of the m-ary spider
            let mut perm: Vec<usize> = (0..m).collect();
            perm[0] = leg;
            for (w, slot) in perm.iter_mut().enumerate().skip(1) {
                *slot = if w <= leg { w - 1 } else { w };
            }
            pre = pre.then(Diagram::permutation(&perm));
            out.push((pre.then(y_cz_m1(m)), y_cz_m1(m + 1)));
        }
    }
    out
}

fn unit(c: char) -> Diagram {
    match c {
        'X' => Diagram::single(red(0, 1, P0)),
        'Y' => d(vec![vec![red(0, 1, P0)], vec![green(1, 1, HALF)]]),
        _ => Diagram::single(green(0, 1, P0)),
    }
}

/// Local frame taking a constituent's basis to the 𝒳 basis, or its inverse.
fn frame(c: char, inverse: bool) -> Generator {
    match (c, inverse) {
        ('Y', false) => green(1, 1, MHALF),
        ('Y', true) => green(1, 1, HALF),
        ('Z', _) => Hadamard,
        _ => Wire,
    }
}

fn cw_delete() -> Vec<(Diagram, Diagram)> {
    vec![(cz_adjacent(2, 0).then(cz_adjacent(2, 0)), Diagram::wires(2))]
}

fn cw_xy(generate: bool) -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for a in ['X', 'Y'] {
        for b in ['X', 'Y'] {
            let sep = unit(a).beside(&unit(b));
            let wired = sep.clone().then(cz_adjacent(2, 0));
            if generate {
                let gadget = d(vec![vec![frame(a, false), frame(b, false)]])
                    .then(cz_adjacent(2, 0))
                    .then(d(vec![vec![frame(a, true), frame(b, true)]]));
                out.push((sep.then(cz_adjacent(2, 0)), unit(a).beside(&unit(b)).then(gadget)));
            } else {
                out.push((wired.then(cz_adjacent(2, 0)), sep));
            }
        }
    }
    out
}

fn cw_z_same() -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for a in [P0, PI] {
        for b in [P0, PI] {
            let sep = d(vec![vec![red(0, 1, a), red(0, 1, b)]]);
            out.push((sep.clone().then(cz_adjacent(2, 0)), sep));
        }
    }
    out
}

fn cw_swap() -> Vec<(Diagram, Diagram)> {
    let hh = Diagram::from_layers(vec![vec![Hadamard, Hadamard]]);
    let lhs = hh.clone().then(cz_adjacent(2, 0)).then(hh.clone()).then(cz_adjacent(2, 0));
    let rhs = cz_adjacent(2, 0).layer(vec![Swap]).then(hh);
    vec![(lhs, rhs)]
}

/// Every catalogued rule with its concrete instances.
pub fn catalog() -> Vec<Rule> {
    let r = |id, title, instances| Rule { id, title, scalar_only: false, instances };
    let s = |id, title, instances| Rule { id, title, scalar_only: true, instances };
    let mut green_fuse = fuse(Colour::G);
    green_fuse.extend(fuse_double(Colour::G));
    let mut red_fuse = fuse(Colour::R);
    red_fuse.extend(fuse_double(Colour::R));
    vec![
        r("zx1-fuse-green", "green fuse", green_fuse),
        r("zx2-fuse-red", "red fuse", red_fuse),
        r("zx3-loop-green", "green loop", loops(Colour::G, false)),
        r("zx4-loop-red", "red loop", loops(Colour::R, false)),
        r("zx5-cup-green", "green cup", cups(Colour::G)),
        r("zx6-cup-red", "red cup", cups(Colour::R)),
        r("zx7-copy-green-pi", "green pi-copy", pi_copy(Colour::G)),
        r("zx8-copy-red-pi", "red pi-copy", pi_copy(Colour::R)),
        r("zx9-copy-green", "green copy", copy(Colour::G)),
        r("zx10-copy-red", "red copy", copy(Colour::R)),
        r("zx11-bialgebra", "bialgebra", bialgebra()),
        r("zx12-had-transform", "colour change", colour_change()),
        r("zx13-had-euler", "Euler decomposition", euler()),
        r("zx14-pi-disconnect", "zero (disconnect)", zero_disconnect()),
        s("zx15-star", "zero (star scalar)", star_scalar()),
        s("zx16-zero", "zero scalar", zero_scalar()),
        r("dzx1-hopf", "Hopf", hopf()),
        r("dzx2-yank", "yanking", yank()),
        r("dzx3-identity", "identity", identity()),
        s("dzx4-star-inverse", "star inverse", star_inverse()),
        r("dzx5-had-unitary", "Hadamard unitary", had_unitary()),
        r("dzx6-loop-green-had", "green Hadamard loop", loops(Colour::G, true)),
        r("dzx7-loop-red-had", "red Hadamard loop", loops(Colour::R, true)),
        r("hopf-had-green", "Hopf through Hadamards, green", hopf_had(Colour::G)),
        r("hopf-had-red", "Hopf through Hadamards, red", hopf_had(Colour::R)),
        r("gen-bialg-2-2", "generalised bialgebra K(2,2)", gen_bialg_instances(2, 2)),
        r("gen-bialg-2-3", "generalised bialgebra K(2,3)", gen_bialg_instances(2, 3)),
        r("y-equiv-1", "phase-free Y merge vs phased form", y_equiv_1()),
        r("y-equiv-2", "Y merge composed on a leg", y_equiv_2()),
        r("cw-delete", "double CZ cancels", cw_delete()),
        r("cw-xy-delete", "CZ deletes XY entanglement", cw_xy(false)),
        r("cw-xy-generate", "CZ generates XY entanglement", cw_xy(true)),
        r("cw-z-same", "CZ fixes Z product states", cw_z_same()),
        r("cw-swap", "CZ on a Z-wired pair", cw_swap()),
    ]
}

pub fn verify_instances(instances: &[(Diagram, Diagram)], scalar_only: bool) -> Verdict {
    let mut scalar = None;
    let mut failures = 0;
    for (i, (lhs, rhs)) in instances.iter().enumerate() {
        let (a, b) = match (lhs.eval(), rhs.eval()) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                failures += 1;
                continue;
            }
        };
        let ok = if scalar_only { a == b } else { a.is_proportional(&b).unwrap_or(false) };
        if !ok {
            failures += 1;
        } else if i == 0 {
            scalar = a.proportional(&b).ok().flatten();
        }
    }
    Verdict { holds_up_to_scalar: failures == 0, scalar, instances: instances.len(), failures }
}

pub fn verify_rule(id: &str) -> Result<Verdict, UnknownRule> {
    let rule = catalog().into_iter().find(|r| r.id == id).ok_or(UnknownRule)?;
    Ok(verify_instances(&rule.instances, rule.scalar_only))
}

/// Adds π to the first spider of a diagram, or appends a π spider when it has none.
pub fn mutate(d: &Diagram) -> Diagram {
    let mut out = d.clone();
    for layer in out.layers.iter_mut() {
        for g in layer.iter_mut() {
            if let Some(m) = g.with_extra_pi() {
                *g = m;
                return out;
            }
        }
    }
    let w = out.outs();
    if w == 0 {
        out.layers.push(vec![green(0, 0, PI)]);
    } else {
        let mut l = vec![green(1, 1, PI)];
        l.extend(wires(w - 1));
        out.layers.push(l);
    }
    out
}
