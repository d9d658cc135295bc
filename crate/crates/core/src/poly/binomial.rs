use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::{Monomial, Polynomial};
use crate::error::PolyError;
use crate::lattice::ArrowVector;
use crate::linalg::Rational;

/// `S^{w⁺} − S^{w⁻}` for an arrow-indexed vector `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial {
    w: ArrowVector,
}

pub fn binomial_of(w: &ArrowVector) -> Binomial {
    Binomial { w: w.clone() }
}

impl Binomial {
    pub fn new(w: ArrowVector) -> Self {
        Self { w }
    }

    pub fn vector(&self) -> &ArrowVector {
        &self.w
    }

    pub fn nvars(&self) -> usize {
        self.w.len()
    }

    pub fn head(&self) -> Monomial {
        Monomial::new(self.w.positive_part().into_entries())
    }

    pub fn tail(&self) -> Monomial {
        Monomial::new(self.w.negative_part().into_entries())
    }

    pub fn l1_norm(&self) -> i64 {
        self.w.l1_norm()
    }

    /// As a polynomial in the S-variables.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            self.nvars(),
            [
                (self.head(), Rational::from_integer(1.into())),
                (self.tail(), Rational::from_integer((-1).into())),
            ],
        )
    }

    /// Image under `S_α ↦ assignment[α]`.
    pub fn evaluate(&self, assignment: &[Polynomial]) -> Result<Polynomial, PolyError> {
        self.to_polynomial().substitute(assignment)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            self.head().render("S"),
            self.tail().render("S")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_rational(self) -> Rational {
        match self {
            Sign::Plus => Rational::from_integer(1.into()),
            Sign::Minus => Rational::from_integer((-1).into()),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One summand `sign · S^cofactor · generator` of a telescoping identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceStep {
    pub sign: Sign,
    pub generator: usize,
    pub cofactor: Monomial,
}

impl TraceStep {
    pub fn new(sign: Sign, generator: usize, cofactor: Monomial) -> Self {
        Self {
            sign,
            generator,
            cofactor,
        }
    }

    /// Renders with generator names `names[generator]`.
    pub fn render(&self, names: &[String]) -> String {
        format!(
            "{}{}*{}",
            self.sign,
            self.cofactor.render("S"),
            names[self.generator]
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Telescope {
    Reduced(Vec<TraceStep>),
    Irreducible,
}

impl Telescope {
    pub fn steps(&self) -> Option<&[TraceStep]> {
        match self {
            Telescope::Reduced(s) => Some(s),
            Telescope::Irreducible => None,
        }
    }
}

/// Default cap on the number of monomials visited by [`telescope_reduce`].
pub const TELESCOPE_STATE_CAP: usize = 1 << 16;

/// Writes `target` as `Σ ± S^c · g` over `generators` by moving from `S^{w⁺}`
/// to `S^{w⁻}` one generator at a time: a step with `+g` replaces a factor
/// `S^{g⁺}` of the current monomial by `S^{g⁻}`, a step with `−g` does the
/// reverse. Breadth-first, so the trace is a shortest one; generators are
/// tried in list order, `+` before `−`. Search depth is at most `4·|w|`.
pub fn telescope_reduce(target: &Binomial, generators: &[Binomial]) -> Telescope {
    telescope_reduce_capped(target, generators, TELESCOPE_STATE_CAP)
}

pub fn telescope_reduce_capped(
    target: &Binomial,
    generators: &[Binomial],
    cap: usize,
) -> Telescope {
    let start = target.head();
    let goal = target.tail();
    if start == goal {
        return Telescope::Reduced(Vec::new());
    }
    let max_depth = 4 * target.l1_norm() as usize;
    let moves: Vec<(Sign, usize, Monomial, Monomial)> = generators
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            [
                (Sign::Plus, i, g.head(), g.tail()),
                (Sign::Minus, i, g.tail(), g.head()),
            ]
        })
        .filter(|(_, _, from, to)| from != to)
        .collect();

    let mut parent: HashMap<Monomial, Option<(Monomial, TraceStep)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((m, depth)) = queue.pop_front() {
        if depth == max_depth {
            continue;
        }
        for (sign, g, from, to) in &moves {
            if !from.divides(&m) {
                continue;
            }
            let cofactor = m.div(from);
            let next = cofactor.mul(to);
            if parent.contains_key(&next) {
                continue;
            }
            let step = TraceStep::new(*sign, *g, cofactor);
            parent.insert(next.clone(), Some((m.clone(), step)));
            if next == goal {
                return Telescope::Reduced(unwind(&parent, next));
            }
            if parent.len() >= cap {
                return Telescope::Irreducible;
            }
            queue.push_back((next, depth + 1));
        }
    }
    Telescope::Irreducible
}

fn unwind(
    parent: &HashMap<Monomial, Option<(Monomial, TraceStep)>>,
    mut at: Monomial,
) -> Vec<TraceStep> {
    let mut steps = Vec::new();
    while let Some(Some((prev, step))) = parent.get(&at) {
        steps.push(step.clone());
        at = prev.clone();
    }
    steps.reverse();
    steps
}

/// `Σ sign · S^cofactor · generator` as a polynomial in the S-variables.
pub fn expand_trace(steps: &[TraceStep], generators: &[Binomial], nvars: usize) -> Polynomial {
    steps.iter().fold(Polynomial::zero(nvars), |acc, step| {
        let g = generators[step.generator]
            .to_polynomial()
            .mul_monomial(&step.cofactor)
            .scale(&step.sign.as_rational());
        &acc + &g
    })
}
