//! Layered ZX diagrams and their exact interpretation.

mod rules;

pub use rules::{catalog, mutate, verify_instances, verify_rule, Rule, UnknownRule, Verdict};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::{hadamard, swap, ExactScalar, ShapeError, Tensor};

/// A Clifford phase, stored as a count of quarter turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ZERO: Phase = Phase(0);
    pub const PLUS_HALF: Phase = Phase(1);
    pub const PI: Phase = Phase(2);
    pub const MINUS_HALF: Phase = Phase(3);
    pub const ALL: [Phase; 4] = [Phase::ZERO, Phase::PI, Phase::PLUS_HALF, Phase::MINUS_HALF];

    pub fn quarter_turns(self) -> u8 {
        self.0
    }

    pub fn neg(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn plus(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    /// `e^{iα}`.
    pub fn exp(self) -> ExactScalar {
        ExactScalar::i_pow(self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "π/2",
            2 => "π",
            _ => "-π/2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Green { ins: usize, outs: usize, phase: Phase },
    Red { ins: usize, outs: usize, phase: Phase },
    Hadamard,
    Star,
    Wire,
    Swap,
    Cup,
    Cap,
}

pub use Generator::{Cap, Cup, Hadamard, Star, Swap, Wire};

pub fn green(ins: usize, outs: usize, phase: Phase) -> Generator {
    Generator::Green { ins, outs, phase }
}

pub fn red(ins: usize, outs: usize, phase: Phase) -> Generator {
    Generator::Red { ins, outs, phase }
}

fn hadamards(n: usize) -> Tensor {
    (0..n).fold(Tensor::identity(0), |acc, _| acc.kron(&hadamard()))
}

fn green_tensor(ins: usize, outs: usize, phase: Phase) -> Tensor {
    let (rf, cf) = ((1usize << outs) - 1, (1usize << ins) - 1);
    Tensor::from_fn(ins, outs, |r, c| {
        let mut v = ExactScalar::ZERO;
        if r == 0 && c == 0 {
            v = v + ExactScalar::ONE;
        }
        if r == rf && c == cf {
            v = v + phase.exp();
        }
        v
    })
}

impl Generator {
    pub fn ins(&self) -> usize {
        match *self {
            Generator::Green { ins, .. } | Generator::Red { ins, .. } => ins,
            Hadamard | Wire => 1,
            Star | Cup => 0,
            Swap | Cap => 2,
        }
    }

    pub fn outs(&self) -> usize {
        match *self {
            Generator::Green { outs, .. } | Generator::Red { outs, .. } => outs,
            Hadamard | Wire => 1,
            Star | Cap => 0,
            Swap | Cup => 2,
        }
    }

    pub fn eval(&self) -> Tensor {
        match *self {
            Generator::Green { ins, outs, phase } => green_tensor(ins, outs, phase),
            Generator::Red { ins, outs, phase } => {
                hadamards(ins).then(&green_tensor(ins, outs, phase)).then(&hadamards(outs))
            }
            Hadamard => hadamard(),
            Star => Tensor::scalar(ExactScalar::HALF),
            Wire => Tensor::identity(1),
            Swap => swap(),
            Cup => green_tensor(0, 2, Phase::ZERO),
            Cap => green_tensor(2, 0, Phase::ZERO),
        }
    }

    pub fn with_extra_pi(&self) -> Option<Generator> {
        match *self {
            Generator::Green { ins, outs, phase } => Some(green(ins, outs, phase.plus(Phase::PI))),
            Generator::Red { ins, outs, phase } => Some(red(ins, outs, phase.plus(Phase::PI))),
            _ => None,
        }
    }
}

/// A diagram drawn as successive layers of generators placed side by side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagram {
    pub layers: Vec<Vec<Generator>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WidthError {
    pub layer: usize,
    pub expected: usize,
    pub found: usize,
}

impl fmt::Display for WidthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "layer {} takes {} wires but receives {}", self.layer, self.found, self.expected)
    }
}

impl From<ShapeError> for WidthError {
    fn from(e: ShapeError) -> Self {
        WidthError { layer: 0, expected: e.right.1, found: e.left.0 }
    }
}

fn width_in(layer: &[Generator]) -> usize {
    layer.iter().map(|g| g.ins()).sum()
}

fn width_out(layer: &[Generator]) -> usize {
    layer.iter().map(|g| g.outs()).sum()
}

impl Diagram {
    pub fn new() -> Self {
        Diagram { layers: Vec::new() }
    }

    pub fn from_layers(layers: Vec<Vec<Generator>>) -> Self {
        Diagram { layers }
    }

    pub fn single(g: Generator) -> Self {
        Diagram { layers: vec![vec![g]] }
    }

    pub fn wires(n: usize) -> Self {
        Diagram { layers: vec![vec![Wire; n]] }
    }

    pub fn layer(mut self, gs: Vec<Generator>) -> Self {
        self.layers.push(gs);
        self
    }

    pub fn ins(&self) -> usize {
        self.layers.first().map(|l| width_in(l)).unwrap_or(0)
    }

    pub fn outs(&self) -> usize {
        self.layers.last().map(|l| width_out(l)).unwrap_or(0)
    }

    /// Sequential composition: `self` first, then `next`.
    pub fn then(mut self, next: Diagram) -> Diagram {
        self.layers.extend(next.layers);
        self
    }

    /// Parallel composition, padding the shallower side with plain wires.
    pub fn beside(&self, other: &Diagram) -> Diagram {
        let depth = self.layers.len().max(other.layers.len());
        let pad = |d: &Diagram, i: usize| -> Vec<Generator> {
            match d.layers.get(i) {
                Some(l) => l.clone(),
                None => vec![Wire; d.outs()],
            }
        };
        let layers = (0..depth)
            .map(|i| {
                let mut l = pad(self, i);
                l.extend(pad(other, i));
                l
            })
            .collect();
        Diagram { layers }
    }

    /// A circuit of swaps sending wire `j` to position `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Diagram {
        let n = perm.len();
        // pos[w] = current position of original wire w
        let mut at: Vec<usize> = (0..n).collect(); // at[position] = wire
        let mut d = Diagram::new();
        loop {
            let mut moved = false;
            let mut layer = Vec::new();
            let mut p = 0;
            while p < n {
                if p + 1 < n && perm[at[p]] > perm[at[p + 1]] {
                    layer.push(Swap);
                    at.swap(p, p + 1);
                    p += 2;
                    moved = true;
                } else {
                    layer.push(Wire);
                    p += 1;
                }
            }
            if !moved {
                break;
            }
            d.layers.push(layer);
        }
        if d.layers.is_empty() {
            d = Diagram::wires(n);
        }
        d
    }

    pub fn eval(&self) -> Result<Tensor, WidthError> {
        let mut acc: Option<Tensor> = None;
        for (i, layer) in self.layers.iter().enumerate() {
            let t = layer.iter().fold(Tensor::identity(0), |t, g| t.kron(&g.eval()));
            acc = Some(match acc {
                None => t,
                Some(prev) => {
                    if prev.outs() != t.ins() {
                        return Err(WidthError { layer: i, expected: prev.outs(), found: t.ins() });
                    }
                    prev.then(&t)
                }
            });
        }
        Ok(acc.unwrap_or_else(|| Tensor::identity(0)))
    }
}

pub fn eval_diagram(d: &Diagram) -> Result<Tensor, WidthError> {
    d.eval()
}
