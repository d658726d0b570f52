//! The registered verification suites.

mod discrete;
mod ensembles;
mod exact;
mod jack;
mod numeric;
mod special;

use crate::suite::Suite;

pub(crate) fn registry() -> Vec<Suite> {
    vec![
        Suite { name: "dyson", about: "Dyson constant terms, exact", cases: exact::dyson },
        Suite { name: "macdonald", about: "Macdonald constant terms for small root systems, exact", cases: exact::macdonald },
        Suite { name: "morris", about: "Morris constant terms, exact", cases: exact::morris },
        Suite { name: "q_morris", about: "q-Morris constant terms and their q = 1 values, exact", cases: exact::q_morris },
        Suite { name: "q_dyson", about: "q-Dyson constant terms and their q = 1 values, exact", cases: exact::q_dyson },
        Suite { name: "jack", about: "Jack polynomial structure, norms, evaluation, Cauchy and binomial identities", cases: jack::cases },
        Suite { name: "closed_numeric", about: "gamma-product evaluations against quadrature and Monte Carlo", cases: numeric::closed_numeric },
        Suite { name: "identities", about: "recurrences, functional equations and limits at random parameters", cases: special::identities },
        Suite { name: "kadell", about: "Kadell, Aomoto, Hua-Kadell, Euler and Gauss integrals, two-variable Jack integrals", cases: numeric::kadell },
        Suite { name: "q_selberg", about: "Jackson sums against the q-Selberg product", cases: numeric::q_selberg },
        Suite { name: "elliptic", about: "elliptic gamma identities and elliptic beta integrals", cases: special::elliptic },
        Suite { name: "ensembles", about: "random-matrix and random-recurrence samplers", cases: ensembles::cases },
        Suite { name: "discrete", about: "Hankel hyperdeterminants and the Stanley probability, exact", cases: discrete::discrete },
        Suite { name: "gelfond", about: "Gelfond minimum by constrained optimization", cases: discrete::gelfond },
    ]
}
