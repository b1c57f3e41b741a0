use std::fmt;

use super::signed::{CircuitSet, SignedSet};

/// The first circuit axiom a family violates, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// C0: the empty signed set is present.
    EmptyCircuit,
    /// C1: the negation of this circuit is missing.
    MissingNegation(SignedSet),
    /// C2: `smaller`'s support lies inside `larger`'s but they are not `±` equal.
    Comparable { smaller: SignedSet, larger: SignedSet },
    /// C3: no circuit eliminates `element` from `x` and `y`.
    NoElimination { x: SignedSet, y: SignedSet, element: usize },
}

impl AxiomViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Self::EmptyCircuit => "C0",
            Self::MissingNegation(_) => "C1",
            Self::Comparable { .. } => "C2",
            Self::NoElimination { .. } => "C3",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyCircuit => write!(f, "C0: the empty signed set is a circuit"),
            Self::MissingNegation(x) => write!(f, "C1: {x} is a circuit but its negation is not"),
            Self::Comparable { smaller, larger } => {
                write!(f, "C2: support of {smaller} is contained in support of {larger}")
            }
            Self::NoElimination { x, y, element } => write!(
                f,
                "C3: no circuit eliminates element {} from {x} and {y}",
                element + 1
            ),
        }
    }
}

/// Fixed-width bitset over the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn of(elements: &[usize], ground: usize) -> Self {
        let mut words = vec![0u64; ground.div_ceil(64).max(1)];
        for &e in elements {
            words[e / 64] |= 1 << (e % 64);
        }
        Bits(words)
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn without(&self, e: usize) -> Bits {
        let mut b = self.clone();
        b.0[e / 64] &= !(1 << (e % 64));
        b
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |i| word >> i & 1 == 1).map(move |i| w * 64 + i)
        })
    }
}

struct Masks {
    pos: Bits,
    neg: Bits,
    support: Bits,
}

/// Checks C0, C1 and C2 exhaustively and the elimination axiom C3 (in its
/// weak form) for every pair `X ≠ -Y` and every `e ∈ X⁺ ∩ Y⁻`.
pub fn validate_circuit_axioms(circuits: &CircuitSet) -> Result<(), AxiomViolation> {
    let m = circuits.ground_size();
    let list = circuits.circuits();

    if list.iter().any(SignedSet::is_empty) {
        return Err(AxiomViolation::EmptyCircuit);
    }
    if let Some(x) = list.iter().find(|x| !circuits.contains(&x.negated())) {
        return Err(AxiomViolation::MissingNegation(x.clone()));
    }

    let masks: Vec<Masks> = list
        .iter()
        .map(|c| {
            let pos = Bits::of(c.positive(), m);
            let neg = Bits::of(c.negative(), m);
            let support = pos.or(&neg);
            Masks { pos, neg, support }
        })
        .collect();

    for (i, x) in masks.iter().enumerate() {
        for (j, y) in masks.iter().enumerate() {
            if i == j || !x.support.is_subset(&y.support) {
                continue;
            }
            if list[i] != list[j].negated() {
                return Err(AxiomViolation::Comparable {
                    smaller: list[i].clone(),
                    larger: list[j].clone(),
                });
            }
        }
    }

    for (i, x) in masks.iter().enumerate() {
        for (j, y) in masks.iter().enumerate() {
            if list[i] == list[j].negated() {
                continue;
            }
            let eliminable = x.pos.and(&y.neg);
            if eliminable.0.iter().all(|&w| w == 0) {
                continue;
            }
            let union_pos = x.pos.or(&y.pos);
            let union_neg = x.neg.or(&y.neg);
            for e in eliminable.elements() {
                let allowed_pos = union_pos.without(e);
                let allowed_neg = union_neg.without(e);
                let found = masks
                    .iter()
                    .any(|z| z.pos.is_subset(&allowed_pos) && z.neg.is_subset(&allowed_neg));
                if !found {
                    return Err(AxiomViolation::NoElimination {
                        x: list[i].clone(),
                        y: list[j].clone(),
                        element: e,
                    });
                }
            }
        }
    }
    Ok(())
}
