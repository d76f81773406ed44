//! Concrete elements of `I_n`, `T_n`, `S_n` and a product-closure engine that
//! enumerates the finite monoid they generate.

mod monoid;
mod notation;
mod partial;
mod transformation;

pub use monoid::{closure, closure_with_cap, FiniteMonoid, Monoid, MonoidTable, DEFAULT_CAP};
pub use notation::{cycle_link_format, cycle_link_parse};
pub use partial::{pcompose, pinverse, PartialBijection};
pub use transformation::{tcompose, Permutation, Transformation};

/// Generators of `S_n`: the transposition (1,2) and the long cycle.
pub fn symmetric_group_generators(n: usize) -> Vec<Permutation> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::transposition(n, 1, 2).unwrap());
    }
    if n >= 3 {
        let cycle: Vec<usize> = (1..=n).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
    }
    gens
}

pub fn symmetric_group(n: usize) -> FiniteMonoid<Permutation> {
    closure(
        &symmetric_group_generators(n),
        Permutation::identity(n),
        |a, b| a.compose_unchecked(b),
    )
    .expect("symmetric group within cap")
}

/// `I_n`, generated by `S_n` together with the partial identity on `{2..n}`.
pub fn symmetric_inverse_monoid(n: usize) -> FiniteMonoid<PartialBijection> {
    let mut gens: Vec<_> = symmetric_group_generators(n)
        .iter()
        .map(|p| p.to_partial())
        .collect();
    let rest: Vec<usize> = (2..=n).collect();
    gens.push(PartialBijection::partial_identity(n, &rest).unwrap());
    closure(&gens, PartialBijection::identity(n), |a, b| {
        a.compose_unchecked(b)
    })
    .expect("symmetric inverse monoid within cap")
}

/// `T_n`, generated by `S_n` together with the map sending 2 to 1.
pub fn full_transformation_monoid(n: usize) -> FiniteMonoid<Transformation> {
    let mut gens: Vec<_> = symmetric_group_generators(n)
        .iter()
        .map(|p| p.as_transformation().clone())
        .collect();
    if n >= 2 {
        let mut images: Vec<usize> = (1..=n).collect();
        images[1] = 1;
        gens.push(Transformation::new(&images).unwrap());
    }
    closure(&gens, Transformation::identity(n), |a, b| {
        a.compose_unchecked(b)
    })
    .expect("full transformation monoid within cap")
}

impl From<&Permutation> for PartialBijection {
    fn from(p: &Permutation) -> Self {
        p.to_partial()
    }
}
