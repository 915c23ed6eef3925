use num_traits::{One, Signed, Zero};

use super::{Analysis, ProbeSection};
use crate::check::Check;
use crate::curve::{euler_identity_check, kernel_identity, milnor_numbers, mu_constancy_probe, nu_positivity_check};
use crate::frobenius::{
    dual_basis_check, euler_jacobi_check, fibre_semisimplicity_probe, frobenius_axiom_check, nilpotency_probe,
    primitivity_check, random_small_u, socle_degree_check, FibreProbeReport, ProbeStatus,
};
use crate::gaussmanin::{
    chain_grading_check, connection_consistency_check, connection_shape_check, minus_f_operator, BrieskornElement,
    BrieskornLattice,
};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub t_samples: Vec<Rational>,
    /// Parameter vectors for the fibre probes; empty means `u = 0` plus one
    /// seeded small vector.
    pub u_samples: Vec<Vec<Rational>>,
}

fn chain_basis_check(a: &Analysis<'_>) -> Check {
    let pair = a.pair;
    let n = minus_f_operator(pair);
    let mut bad = Vec::new();
    if a.chains.dim() != pair.mu() || a.chains.basis_matrix().rank() != pair.mu() {
        bad.push("chain vectors are not a basis".to_string());
    }
    match milnor_numbers(pair) {
        Ok(m) if m.mu2 != a.chains.len() => bad.push(format!("{} chains but mu2 = {}", a.chains.len(), m.mu2)),
        _ => {}
    }
    for (i, c) in a.chains.chains().iter().enumerate() {
        if n.mul_vec(&c.tail().coords).iter().any(|v| !v.is_zero()) {
            bad.push(format!("chain {i}: -f does not kill the tail"));
        }
        for (j, v) in c.vectors.iter().enumerate() {
            if !v.representative.is_homogeneous(pair.weights()) {
                bad.push(format!("vector ({i},{j}) is not homogeneous"));
            }
            if j > 0 && &v.nu - &c.vectors[j - 1].nu != Rational::one() {
                bad.push(format!("vector ({i},{j}): nu does not step by 1"));
            }
        }
    }
    let pass = bad.is_empty();
    let details = if pass {
        format!(
            "{} chains, {} vectors, homogeneous, full rank",
            a.chains.len(),
            a.chains.dim()
        )
    } else {
        bad.join("; ")
    };
    Check::new("jordan_chain_basis", pass, details)
}

fn spectrum_check(a: &Analysis<'_>) -> Check {
    let total = a.spectrum.total();
    let in_range = a
        .spectrum
        .entries
        .iter()
        .all(|e| !e.lambda.is_negative() && e.lambda <= Rational::one());
    Check::new(
        "spectrum_total",
        total == a.pair.mu() && in_range,
        format!(
            "sum of multiplicities {total}, mu {}, all lambda in [0, 1]: {in_range}",
            a.pair.mu()
        ),
    )
}

fn brieskorn_checks(a: &Analysis<'_>) -> Vec<Check> {
    let lattice = match BrieskornLattice::from_chains(a.pair, a.chains.clone()) {
        Ok(l) => l,
        Err(e) => return vec![Check::fail("brieskorn_lattice", e.to_string())],
    };
    let mut bad = Vec::new();
    for (i, rep) in a.chains.representatives().iter().enumerate() {
        match lattice.reduce_at_origin(rep) {
            Ok(el) if el == BrieskornElement::basis(a.chains.dim(), i) => {}
            Ok(_) => bad.push(format!("representative {i} does not reduce to itself")),
            Err(e) => bad.push(format!("representative {i}: {e}")),
        }
    }
    let reps = Check::new(
        "brieskorn_representatives",
        bad.is_empty(),
        if bad.is_empty() {
            "every chain representative reduces to its own basis vector".to_string()
        } else {
            bad.join("; ")
        },
    );
    vec![reps, connection_consistency_check(&lattice, &a.connection)]
}

fn probe_section(r: &FibreProbeReport) -> ProbeSection {
    ProbeSection {
        t0: format_rational(&r.t0),
        u: r.u.iter().map(format_rational).collect(),
        dim: r.dim,
        status: match r.status {
            ProbeStatus::Semisimple => "semisimple",
            ProbeStatus::Inconclusive => "inconclusive",
            ProbeStatus::DimensionMismatch => "dimension_mismatch",
        }
        .to_string(),
        certificate_element: r.certificate.as_ref().map(|c| c.element.to_string()),
        minimal_polynomial: r.certificate.as_ref().map(|c| c.minimal_polynomial.to_string()),
        note: r.note.clone(),
    }
}

/// Fibre algebras at every nonzero `t` sample and every `u` sample. Only the
/// dimension is a check; semisimplicity for sampled `u` is reported as data.
pub fn fibre_probes(a: &Analysis<'_>, opts: &VerifyOptions) -> (Check, Vec<ProbeSection>) {
    let pair = a.pair;
    let mu = a.chains.dim();
    let u_samples = if opts.u_samples.is_empty() {
        vec![vec![Rational::zero(); mu], random_small_u(&a.chains, opts.seed)]
    } else {
        opts.u_samples.clone()
    };
    let mut bad = Vec::new();
    let mut sections = Vec::new();
    for t in opts.t_samples.iter().filter(|t| !t.is_zero()) {
        for (k, u) in u_samples.iter().enumerate() {
            match fibre_semisimplicity_probe(pair, &a.chains, t, u, opts.seed) {
                Ok(r) => {
                    if r.dim != Some(pair.mu()) {
                        bad.push(format!("t={}, u#{k}: {}", format_rational(t), r.note));
                    }
                    sections.push(probe_section(&r));
                }
                Err(e) => bad.push(format!("t={}, u#{k}: {e}", format_rational(t))),
            }
        }
    }
    let check = Check::new(
        "fibre_dimension",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} fibre algebras of dimension {}", sections.len(), pair.mu())
        } else {
            bad.join("; ")
        },
    );
    (check, sections)
}

/// Runs every check of the pipeline in a fixed order, plus the fibre probes.
pub fn run_verification(a: &Analysis<'_>, opts: &VerifyOptions) -> (Vec<Check>, Vec<ProbeSection>) {
    let pair = a.pair;
    let mut checks = Vec::new();
    checks.push(match milnor_numbers(pair) {
        Ok(m) => Check::pass(
            "milnor_additivity",
            format!("mu = {} = mu1 + mu2 = {} + {}", m.mu, m.mu1, m.mu2),
        ),
        Err(e) => Check::fail("milnor_additivity", e.to_string()),
    });
    checks.push(match kernel_identity(pair) {
        Ok(k) => k.check(),
        Err(e) => Check::fail("kernel_identity", e.to_string()),
    });
    checks.push(euler_identity_check(pair));
    checks.push(nu_positivity_check(pair));
    checks.push(mu_constancy_probe(pair, &opts.t_samples).check());
    checks.push(chain_basis_check(a));
    checks.push(chain_grading_check(pair, &a.chains));
    checks.push(spectrum_check(a));
    checks.push(connection_shape_check(&a.chains, &a.connection));
    checks.extend(brieskorn_checks(a));
    checks.push(dual_basis_check(pair, &a.residue));
    checks.push(euler_jacobi_check(pair, &a.residue));
    checks.push(socle_degree_check(pair, &a.residue));
    checks.extend(frobenius_axiom_check(&a.chain_data));
    checks.push(nilpotency_probe(&a.chain_data));
    checks.push(primitivity_check(pair, &a.chains, &a.connection));
    let (dim_check, probes) = fibre_probes(a, opts);
    checks.push(dim_check);
    (checks, probes)
}

pub fn run_checks(a: &Analysis<'_>, opts: &VerifyOptions) -> Vec<Check> {
    run_verification(a, opts).0
}
