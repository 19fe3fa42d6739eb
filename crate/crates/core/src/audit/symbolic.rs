use num_rational::BigRational;
use num_traits::{One, Zero};

use super::report::AuditReport;
use crate::bounds::{a3_display, a3_second_estimate, general_denominator, second_denominator};
use crate::faber::{
    bell_d, class_operator, f_coefficient, faber_k, faber_k_partition_sum, inverse_coeff_a,
    leading_an_coefficient, ClassParams,
};
use crate::scalar::{format_rational, integer, rational};
use crate::series::{NormalizedSeries, PowerSeries};
use crate::MPoly;

fn a(k: u32) -> MPoly {
    MPoly::var(k)
}

fn c(v: &BigRational) -> MPoly {
    MPoly::constant(v.clone())
}

/// `1 + 6δ/(2λ+1)`, the factor the displays attach to `a3`.
fn display_kappa(p: &ClassParams) -> BigRational {
    BigRational::one() + p.delta() * integer(6) / (p.lambda() * integer(2) + BigRational::one())
}

/// The `F1` and `F2` displays, built verbatim, against the operator expansion.
pub fn audit_f_displays(params: &ClassParams) -> Vec<AuditReport> {
    let (l, m) = (params.lambda(), params.mu());
    let f1_display = a(2).scale(&(m + l + params.xi_delta() * integer(2)));
    let f1 = f_coefficient(2, params).expect("n = 2 is valid");

    let bracket = &a(2).pow(2).scale(&((m - BigRational::one()) * rational(1, 2)))
        + &a(3).scale(&display_kappa(params));
    let f2_display = bracket.scale(&second_denominator(params));
    let f2 = f_coefficient(3, params).expect("n = 3 is valid");

    let plain = params.delta().is_zero();
    vec![
        AuditReport::compare(format!("F1[{params}]"), &f1, &f1_display, true)
            .with_notes("z^1 coefficient of the operator expansion minus the displayed F1"),
        AuditReport::compare(format!("F2[{params}]"), &f2, &f2_display, plain).with_notes(if plain {
            "z^2 coefficient of the operator expansion minus the displayed F2"
        } else {
            "z^2 coefficient of the operator expansion minus the displayed F2; informational for delta > 0"
        }),
    ]
}

/// The leading coefficient of `a_n` in `F_{n-1}` against the theorem's
/// denominator `μ + (n-1)λ + n(n-1)ξδ`. The notes record how far the proof
/// line's `μ + (n-1)λ` is from the computed value.
pub fn audit_theorem1_coefficient(n: usize, params: &ClassParams) -> AuditReport {
    let leading = leading_an_coefficient(n.max(2), params).expect("n >= 2");
    let display = general_denominator(n, params);
    let proof_line = params.mu() + params.lambda() * integer(n as i64 - 1);
    let gap = &leading - &proof_line;
    let notes = if gap.is_zero() {
        "proof-line coefficient mu+(n-1)lambda also matches".to_string()
    } else {
        format!("proof-line coefficient mu+(n-1)lambda differs by {}", format_rational(&gap))
    };
    AuditReport::compare(
        format!("theorem1-denominator[n={n} {params}]"),
        &c(&leading),
        &c(&display),
        false,
    )
    .with_notes(notes)
}

/// The leading coefficient against the proof line `μ + (n-1)λ`.
pub fn audit_theorem1_proof_line(n: usize, params: &ClassParams) -> AuditReport {
    let leading = leading_an_coefficient(n.max(2), params).expect("n >= 2");
    let proof_line = params.mu() + params.lambda() * integer(n as i64 - 1);
    AuditReport::compare(
        format!("theorem1-proof-line[n={n} {params}]"),
        &c(&leading),
        &c(&proof_line),
        false,
    )
    .with_notes("computed leading coefficient minus mu+(n-1)lambda")
}

/// Operator equations for the inverse map `g`: the `z^1` and `z^2`
/// coefficients of `L[g]` against their displays `-(μ+λ)a2` and
/// `(μ+2λ+6ξδ)[(μ+3)/2 a2^2 - (1+6δ/(2λ+1)) a3]`.
pub fn audit_inverse_displays(params: &ClassParams) -> Vec<AuditReport> {
    let g = NormalizedSeries::generic(3).revert();
    let op = class_operator(&g, params);
    let (l, m) = (params.lambda(), params.mu());

    let first_display = a(2).scale(&-(m + l));
    let bracket = &a(2).pow(2).scale(&((m + integer(3)) * rational(1, 2)))
        - &a(3).scale(&display_kappa(params));
    let second_display = bracket.scale(&second_denominator(params));
    vec![
        AuditReport::compare(format!("inverse-operator-z1[{params}]"), op.coeff(1), &first_display, false)
            .with_notes("z^1 coefficient of L[g] for g = f^-1 minus the displayed -(mu+lambda)a2"),
        AuditReport::compare(format!("inverse-operator-z2[{params}]"), op.coeff(2), &second_display, false)
            .with_notes("z^2 coefficient of L[g] for g = f^-1 minus the display"),
    ]
}

/// For `μ ≥ 1`, the reference `|a3|` value against the second derived
/// estimate, which equals `2(1-α)/(μ+2λ+6ξδ)` there. `None` for `μ < 1`.
pub fn audit_a3_display(params: &ClassParams) -> Option<AuditReport> {
    if *params.mu() < BigRational::one() {
        return None;
    }
    let display = a3_display(params);
    let derived = a3_second_estimate(params);
    Some(
        AuditReport::compare(format!("a3-display-mu>=1[{params}]"), &c(&display), &c(&derived), false)
            .with_notes("reference 2(1-alpha)/(mu+2lambda+2xi*delta) minus the derived estimate"),
    )
}

/// Golden expansion of the inverse series through `w^4`.
pub fn audit_inverse_series() -> Vec<AuditReport> {
    let g = NormalizedSeries::generic(4).revert();
    let golden = [
        -a(2),
        &a(2).pow(2).scale(&integer(2)) - &a(3),
        -(&(&a(2).pow(3).scale(&integer(5)) - &(&a(2) * &a(3)).scale(&integer(5))) + &a(4)),
    ];
    golden
        .iter()
        .enumerate()
        .map(|(i, want)| {
            let n = i + 2;
            AuditReport::compare(format!("inverse-series-w{n}"), g.coefficient(n), want, true)
                .with_notes("reversion of the generic series minus the golden coefficient")
        })
        .collect()
}

/// `A_n = K_{n-1}^{-n}/n` against the reversion coefficients, `2 ≤ n ≤ order`.
pub fn audit_inverse_coefficients(order: usize) -> Vec<AuditReport> {
    let g = NormalizedSeries::generic(order).revert();
    (2..=order)
        .map(|n| {
            let an = inverse_coeff_a(n).expect("n >= 2");
            AuditReport::compare(format!("inverse-coefficient-A{n}"), &an, g.coefficient(n), true)
                .with_notes("K_{n-1}^{-n}/n minus the reversion coefficient")
        })
        .collect()
}

/// The three golden `K_n^{-(n+1)}` expansions.
pub fn audit_faber_goldens() -> Vec<AuditReport> {
    let golden = [
        (1, -2, a(2).scale(&integer(-2))),
        (2, -3, &a(2).pow(2).scale(&integer(6)) - &a(3).scale(&integer(3))),
        (
            3,
            -4,
            &(&a(2).pow(3).scale(&integer(-20)) + &(&a(2) * &a(3)).scale(&integer(20)))
                - &a(4).scale(&integer(4)),
        ),
    ];
    golden
        .iter()
        .map(|(n, p, want)| {
            let k = faber_k(*n, *p, *n).expect("n <= order");
            AuditReport::compare(format!("faber-K{n}^{p}"), &k, want, true)
                .with_notes("coefficient extraction minus the golden expansion")
        })
        .collect()
}

/// Partition-sum `K_n^p` against coefficient extraction, and `D_n^m` against
/// the `z^n` coefficient of `(Σ a_k z^k)^m` with `a1 = 1`.
pub fn audit_partition_sums(max_n: usize, max_p: i64) -> Vec<AuditReport> {
    let mut out = Vec::new();
    for p in 1..=max_p {
        for n in 1..=max_n {
            let sum = faber_k_partition_sum(n as u32, p);
            let k = faber_k(n, p, n).expect("n <= order");
            out.push(
                AuditReport::compare(format!("partition-sum-K{n}^{p}"), &sum, &k, true)
                    .with_notes("partition sum minus coefficient extraction"),
            );
        }
    }
    // Σ_{k≥1} a_k z^k with a1 = 1 is the generic normalized series itself
    let base = NormalizedSeries::generic(max_n).as_series().clone();
    let mut power = PowerSeries::one(max_n);
    for m in 1..=max_n as u32 {
        power = power.mul(&base).expect("same order");
        for n in m..=max_n as u32 {
            let d = bell_d(n, m).expect("1 <= m <= n");
            out.push(
                AuditReport::compare(format!("bell-D{n}^{m}"), &d, power.coeff(n as usize), true)
                    .with_notes("partition enumeration minus the series power coefficient"),
            );
        }
    }
    out
}

/// The grid used by the default audit run.
pub fn default_audit_grid() -> Vec<ClassParams> {
    let lambdas = [integer(1), rational(3, 2), integer(2)];
    let mus = [integer(0), rational(1, 2), integer(1), integer(2)];
    let deltas = [integer(0), rational(1, 2), integer(1)];
    let mut grid = Vec::new();
    for l in &lambdas {
        for m in &mus {
            for d in &deltas {
                grid.push(ClassParams::new(l.clone(), m.clone(), d.clone(), integer(0)).expect("valid grid"));
            }
        }
    }
    grid
}

/// Every audit entry for a truncation order and a parameter list.
pub fn full_audit(order: usize, params: &[ClassParams]) -> Vec<AuditReport> {
    let mut out = audit_inverse_series();
    out.extend(audit_inverse_coefficients(order));
    out.extend(audit_faber_goldens());
    out.extend(audit_partition_sums(order.min(6), 5));
    for p in params {
        out.extend(audit_f_displays(p));
        for n in 4..=order.min(6) {
            out.push(audit_theorem1_coefficient(n, p));
            out.push(audit_theorem1_proof_line(n, p));
        }
        out.extend(audit_a3_display(p));
        out.extend(audit_inverse_displays(p));
    }
    out
}
