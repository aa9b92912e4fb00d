//! Reproduction suite: each check recomputes a published result and compares
//! it with transcribed reference data or a stated verdict.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bigwitt::effectivity_expressions;
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::Partition;
use crate::ptypical::{self, closed_k1, PTypWitt};
use crate::rational::{binomial, pow, q, Q};
use crate::symfunc::positivity::{is_schur_positive, tensor_positivity};
use crate::symfunc::tensor::TensorKey;
use crate::symfunc::text::{
    expand_plus_minus, format_ghost_poly, format_terms, parse_linear, parse_symfunc, LinearForm,
};
use crate::symfunc::{convert, BasisTag, SymFunc, TensorSymFunc};

pub const SCHEMA_VERSION: u32 = 1;

const THETA_TABLE: &str = include_str!("../fixtures/theta_table.txt");
const EFFECTIVITY: &str = include_str!("../fixtures/effectivity.txt");
const KSCHUR: &str = include_str!("../fixtures/kschur.txt");

/// Check names in report order.
pub const CHECKS: [&str; 8] = [
    "dp_iterates",
    "drs",
    "effectivity_lists",
    "intro_ring_laws",
    "kschur_counterexample",
    "non_models",
    "reutenauer",
    "theta_table",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub status: Status,
    pub details: Value,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The versioned JSON envelope for a list of reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        SuiteReport { schema: SCHEMA_VERSION, reports }
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_degree: usize,
    /// Include the degree-25 case of `dp_iterates`.
    pub slow: bool,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_degree: 25, slow: false, seed: 0x5eed }
    }
}

fn timed(name: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Result<VerificationReport> {
    let start = Instant::now();
    let (ok, details) = f()?;
    Ok(VerificationReport {
        name: name.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        details,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn need_degree(need: usize, bound: usize) -> Result<()> {
    if need > bound {
        Err(Error::Capacity { degree: need, bound })
    } else {
        Ok(())
    }
}

pub fn run_check(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    match name {
        "dp_iterates" => verify_dp_iterates(opts.slow, opts.max_degree),
        "drs" => verify_drs(opts.max_degree),
        "effectivity_lists" => verify_effectivity_lists(),
        "intro_ring_laws" => verify_intro_ring_laws(opts.seed, 100),
        "kschur_counterexample" => verify_kschur_counterexample(),
        "non_models" => verify_non_models(),
        "reutenauer" => verify_reutenauer(12, opts.max_degree),
        "theta_table" => verify_theta_table(opts.max_degree),
        other => Err(Error::Parse(format!("unknown check {other:?}; known: {}", CHECKS.join(", ")))),
    }
}

/// Runs the named checks in name order, each once.
pub fn run_suite(names: &[&str], opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let mut sorted: Vec<&str> = names.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.into_iter().map(|n| run_check(n, opts)).collect()
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// One transcribed θ-table line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaEntry {
    pub n: usize,
    pub basis: BasisTag,
    pub expression: String,
}

pub fn theta_table_entries() -> Result<Vec<ThetaEntry>> {
    data_lines(THETA_TABLE)
        .map(|line| {
            let bad = || Error::Parse(format!("bad θ-table line {line:?}"));
            let (head, expression) = line.split_once(':').ok_or_else(bad)?;
            let (n, basis) = head.trim().split_once(' ').ok_or_else(bad)?;
            Ok(ThetaEntry {
                n: n.parse().map_err(|_| bad())?,
                basis: basis.trim().parse()?,
                expression: expression.trim().to_string(),
            })
        })
        .collect()
}

pub fn verify_theta_table(bound: usize) -> Result<VerificationReport> {
    need_degree(6, bound)?;
    timed("theta_table", || {
        let mut mismatches = Vec::new();
        let entries = theta_table_entries()?;
        for entry in &entries {
            let expected = convert::to_basis_coeffs(entry.basis, &parse_symfunc(&entry.expression, 6)?);
            let computed = convert::to_basis_coeffs(entry.basis, &SymFunc::theta(entry.n, 6)?);
            if expected != computed {
                mismatches.push(json!({
                    "theta": entry.n,
                    "basis": entry.basis,
                    "expected": format_terms(&expected, entry.basis),
                    "computed": format_terms(&computed, entry.basis),
                }));
            }
        }
        Ok((mismatches.is_empty(), json!({"lines": entries.len(), "mismatches": mismatches})))
    })
}

fn tensor_coeffs_text(coeffs: &BTreeMap<TensorKey, Q>, tag: BasisTag) -> Value {
    Value::Array(
        coeffs.iter().map(|((a, b), c)| json!(format!("{c} {}{a}⊗{}{b}", tag.letter(), tag.letter()))).collect(),
    )
}

fn expect_tensor(label: String, t: &TensorSymFunc, tag: BasisTag, expected: BTreeMap<TensorKey, Q>) -> (bool, Value) {
    let computed = t.to_basis_coeffs(tag);
    let ok = computed == expected;
    (
        ok,
        json!({
            "formula": label,
            "holds": ok,
            "expected": tensor_coeffs_text(&expected, tag),
            "computed": tensor_coeffs_text(&computed, tag),
        }),
    )
}

fn key(a: Partition, b: Partition) -> TensorKey {
    (a, b)
}

/// Positivity in monomials of the generators `θ₁, −θ₂, −θ₃, …`: the
/// coefficient of `θ_λ⊗θ_μ` picks up a sign per part `≥ 2`.
fn negated_generator_positive(t: &TensorSymFunc) -> bool {
    let flips = |l: &Partition| l.parts().iter().filter(|&&k| k >= 2).count();
    t.to_basis_coeffs(BasisTag::W).iter().all(|((a, b), c)| {
        let c = if (flips(a) + flips(b)) % 2 == 1 { -c } else { c.clone() };
        c >= Q::zero()
    })
}

pub fn verify_non_models() -> Result<VerificationReport> {
    timed("non_models", || {
        let b = 6;
        let mut items = Vec::new();
        let mut all = true;
        let mut record = |(ok, v): (bool, Value)| {
            all &= ok;
            items.push(v);
        };
        let (two, one_one) = (Partition::row(2), Partition::column(2));

        let e2 = SymFunc::e(2, b)?;
        record(expect_tensor(
            "Δ×(e2) = e2⊗e1^2 + e1^2⊗e2 - 2 e2⊗e2".into(),
            &e2.coproduct_mul(),
            BasisTag::E,
            [
                (key(two.clone(), one_one.clone()), q(1)),
                (key(one_one.clone(), two.clone()), q(1)),
                (key(two.clone(), two.clone()), q(-2)),
            ]
            .into(),
        ));
        let h2 = SymFunc::h(2, b)?;
        record(expect_tensor(
            "Δ×(h2) = h1^2⊗h1^2 - h1^2⊗h2 - h2⊗h1^2 + 2 h2⊗h2".into(),
            &h2.coproduct_mul(),
            BasisTag::H,
            [
                (key(one_one.clone(), one_one.clone()), q(1)),
                (key(one_one.clone(), two.clone()), q(-1)),
                (key(two.clone(), one_one.clone()), q(-1)),
                (key(two.clone(), two.clone()), q(2)),
            ]
            .into(),
        ));
        for p in [2usize, 3, 5] {
            let theta = SymFunc::theta(p, p)?;
            let (pp, col, empty) = (Partition::row(p), Partition::column(p), Partition::empty());
            let mut add: BTreeMap<TensorKey, Q> =
                [(key(pp.clone(), empty.clone()), q(1)), (key(empty, pp.clone()), q(1))].into();
            for i in 1..p {
                let c = -Q::new(binomial(p as u64, i as u64), BigInt::from(p));
                add.insert(key(Partition::column(i), Partition::column(p - i)), c);
            }
            record(expect_tensor(
                format!("Δ+(θ{p}) = θ{p}⊗1 + 1⊗θ{p} - Σ C({p},i)/{p} θ1^i⊗θ1^({p}-i)"),
                &theta.coproduct_add(),
                BasisTag::W,
                add,
            ));
            record(expect_tensor(
                format!("Δ×(θ{p}) = θ{p}⊗θ1^{p} + θ1^{p}⊗θ{p} + {p} θ{p}⊗θ{p}"),
                &theta.coproduct_mul(),
                BasisTag::W,
                [
                    (key(pp.clone(), col.clone()), q(1)),
                    (key(col, pp.clone()), q(1)),
                    (key(pp.clone(), pp), q(p as i64)),
                ]
                .into(),
            ));
            // With -θ_p as generator the sign of Δ+ is fixed and one appears in Δ×.
            let d = -&theta;
            let add_pos = negated_generator_positive(&d.coproduct_add());
            let mul_pos = negated_generator_positive(&d.coproduct_mul());
            record((
                add_pos && !mul_pos,
                json!({"formula": format!("-θ{p}: Δ+ positive, Δ× not"), "holds": add_pos && !mul_pos}),
            ));
        }
        for n in 1..=4 {
            for (tag, f) in [(BasisTag::E, SymFunc::e(n, b)?), (BasisTag::H, SymFunc::h(n, b)?)] {
                let ok = tensor_positivity(&f.coproduct_add(), tag).positive;
                record((
                    ok,
                    json!({"formula": format!("Δ+({}{n}) is {}-positive", tag.letter(), tag.letter()), "holds": ok}),
                ));
            }
        }
        for (tag, f) in [(BasisTag::E, &e2), (BasisTag::H, &h2)] {
            let report = tensor_positivity(&f.coproduct_mul(), tag);
            let ok = !report.positive;
            record((
                ok,
                json!({
                    "formula": format!("Δ×({}2) has a negative {}⊗{} coefficient", tag.letter(), tag.letter(), tag.letter()),
                    "holds": ok,
                    "witness": report.witness.map(|((a, b), c)| format!("{c} at {a}⊗{b}")),
                }),
            ));
        }
        Ok((all, json!({"items": items})))
    })
}

pub fn verify_reutenauer(max_n: usize, bound: usize) -> Result<VerificationReport> {
    need_degree(max_n, bound)?;
    timed("reutenauer", || {
        let mut items = Vec::new();
        let mut all = true;
        for n in 2..=max_n {
            let r = is_schur_positive(&-&SymFunc::theta(n, max_n)?);
            all &= r.is_effective();
            items.push(json!({"element": format!("-θ{n}"), "schur_positive": r.positive, "integral": r.integral}));
        }
        let t1 = is_schur_positive(&SymFunc::theta(1, max_n)?);
        all &= t1.is_effective();
        items.push(json!({"element": "θ1", "schur_positive": t1.positive}));
        let t2 = is_schur_positive(&SymFunc::theta(2, max_n)?);
        all &= !t2.positive;
        items.push(json!({"element": "θ2", "schur_positive": t2.positive, "expected": false, "report": t2}));
        Ok((all, json!({"max_n": max_n, "items": items})))
    })
}

fn d_iterate_difference(outer: usize, inner: &[usize], bound: usize) -> Result<SymFunc> {
    let total: usize = inner.iter().product::<usize>() * outer;
    let mut comp = SymFunc::psi(1, bound)?;
    for &k in inner.iter().rev() {
        comp = SymFunc::d_n(k, bound)?.plethysm(&comp)?;
    }
    Ok(&SymFunc::d_n(total, bound)? - &SymFunc::d_n(outer, bound)?.plethysm(&comp)?)
}

/// The cases `d_{p^{m+n}} − d_{p^m}∘d_{p^n}` and `d_{p^3} − d_p^∘3`, written as
/// `(outer, inner chain)`.
fn dp_cases(slow: bool) -> Vec<(usize, Vec<usize>)> {
    let mut cases = vec![(2, vec![2]), (2, vec![4]), (4, vec![2]), (2, vec![2, 2]), (3, vec![3])];
    if slow {
        cases.push((5, vec![5]));
    }
    cases
}

fn describe(outer: usize, inner: &[usize]) -> String {
    let total = outer * inner.iter().product::<usize>();
    let chain: Vec<String> = std::iter::once(outer).chain(inner.iter().copied()).map(|k| format!("d{k}")).collect();
    format!("d{total} - {}", chain.join("∘"))
}

pub fn verify_dp_iterates(slow: bool, bound: usize) -> Result<VerificationReport> {
    let cases = dp_cases(slow);
    let need = cases.iter().map(|(o, i)| o * i.iter().product::<usize>()).max().unwrap_or(0);
    need_degree(need, bound)?;
    timed("dp_iterates", || {
        let mut items = Vec::new();
        let mut all = true;
        for (outer, inner) in &cases {
            let degree = outer * inner.iter().product::<usize>();
            let r = is_schur_positive(&d_iterate_difference(*outer, inner, degree)?);
            all &= r.is_effective();
            items.push(json!({"element": describe(*outer, inner), "schur_positive": r.positive, "integral": r.integral, "report": r}));
        }
        Ok((all, json!({"slow": slow, "items": items})))
    })
}

/// `(r, s)` pairs with the published verdict on `d_{rs} − d_r∘d_s ∈ Sch`.
pub const DRS_CASES: [((usize, usize), bool); 6] =
    [((2, 3), true), ((2, 5), true), ((3, 5), true), ((5, 3), true), ((3, 2), false), ((5, 2), false)];

pub fn verify_drs(bound: usize) -> Result<VerificationReport> {
    need_degree(15, bound)?;
    timed("drs", || {
        let mut items = Vec::new();
        let mut all = true;
        for ((r, s), expected) in DRS_CASES {
            let report = is_schur_positive(&d_iterate_difference(r, &[s], r * s)?);
            let ok = report.positive == expected && report.integral && (expected || report.witness.is_some());
            all &= ok;
            items.push(json!({
                "element": describe(r, &[s]),
                "expected_positive": expected,
                "schur_positive": report.positive,
                "report": report,
            }));
        }
        Ok((all, json!({"items": items})))
    })
}

/// Transcribed effectivity lists: `(basis, printed line, expansions)`.
pub fn effectivity_entries() -> Result<Vec<(BasisTag, String, Vec<String>)>> {
    let mut tag = None;
    let mut out = Vec::new();
    for line in data_lines(EFFECTIVITY) {
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            tag = Some(name.parse::<BasisTag>()?);
            continue;
        }
        let t = tag.ok_or_else(|| Error::Parse("effectivity data before a section header".into()))?;
        out.push((t, line.to_string(), expand_plus_minus(line)));
    }
    Ok(out)
}

pub fn verify_effectivity_lists() -> Result<VerificationReport> {
    timed("effectivity_lists", || {
        let entries = effectivity_entries()?;
        let mut all = true;
        let mut sections = Vec::new();
        for tag in [BasisTag::S, BasisTag::M] {
            let computed = effectivity_expressions(tag, 4)?;
            let mut unmatched: Vec<(Partition, SymFunc)> = computed.clone();
            let mut unknown = Vec::new();
            let mut printed = 0;
            for (_, line, readings) in entries.iter().filter(|(t, _, _)| *t == tag) {
                for reading in readings {
                    printed += 1;
                    let f = parse_symfunc(reading, 4)?;
                    match unmatched.iter().position(|(_, g)| g.terms() == f.terms()) {
                        Some(i) => {
                            unmatched.remove(i);
                        }
                        None => unknown.push(json!({"printed": line, "reading": reading})),
                    }
                }
            }
            let ok = unknown.is_empty() && unmatched.is_empty() && printed == computed.len();
            all &= ok;
            sections.push(json!({
                "basis": tag,
                "printed": printed,
                "computed": computed.len(),
                "unmatched_printed": unknown,
                "missing": unmatched.iter().map(|(l, f)| json!({"partition": l, "expression": format_ghost_poly(f)})).collect::<Vec<_>>(),
                "expressions": computed.iter().map(|(l, f)| json!({"partition": l, "expression": format_ghost_poly(f)})).collect::<Vec<_>>(),
            }));
        }
        Ok((all, json!({"sections": sections})))
    })
}

/// Outcome of the 3-Schur coproduct computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSchurAnalysis {
    /// 3-Schur indices, in the order used for the coordinates.
    pub basis: Vec<Partition>,
    /// `Δ×(s^(3)_{22})` in `s^(3)⊗s^(3)` coordinates.
    pub coproduct: BTreeMap<TensorKey, Q>,
    /// `Σ_μ c_μ ψ_μ` rewritten in 3-Schur coordinates, which should be `12 s^(3)_{22}`.
    pub reconstruction: BTreeMap<Partition, Q>,
    /// `Δ×(s^(3)_{22})` in `s⊗s` coordinates.
    pub schur_expansion: BTreeMap<TensorKey, Q>,
}

fn split_equation(line: &str) -> Result<(LinearForm, LinearForm)> {
    let (l, r) = line.split_once('=').ok_or_else(|| Error::Parse(format!("no '=' in {line:?}")))?;
    Ok((parse_linear(l)?, parse_linear(r)?))
}

/// Uses only the transcribed relations: the first expresses `12 s^(3)_{22}` in
/// power-sum products, the others express those products in 3-Schur functions.
pub fn kschur_analysis() -> Result<KSchurAnalysis> {
    let lines: Vec<&str> = data_lines(KSCHUR).collect();
    let (first, rest) = lines.split_first().ok_or_else(|| Error::Parse("empty 3-Schur data".into()))?;
    let (lhs, rhs) = split_equation(first)?;
    let (target, scale) = match lhs.iter().collect::<Vec<_>>().as_slice() {
        [((name, l), c)] if name == "ks" => (l.clone(), (*c).clone()),
        _ => return Err(Error::Parse(format!("expected a multiple of one ks symbol in {first:?}"))),
    };
    let mut psi_rows: BTreeMap<Partition, BTreeMap<Partition, Q>> = BTreeMap::new();
    for line in rest {
        let (l, r) = split_equation(line)?;
        let mu = match l.iter().collect::<Vec<_>>().as_slice() {
            [((name, mu), c)] if name == "p" && **c == q(1) => mu.clone(),
            _ => return Err(Error::Parse(format!("expected a single p symbol on the left of {line:?}"))),
        };
        let row = r
            .into_iter()
            .map(
                |((name, l), c)| {
                    if name == "ks" {
                        Ok((l, c))
                    } else {
                        Err(Error::Parse(format!("unexpected {name}")))
                    }
                },
            )
            .collect::<Result<_>>()?;
        psi_rows.insert(mu, row);
    }
    let mut basis: Vec<Partition> = psi_rows.values().flat_map(|r| r.keys().cloned()).collect();
    basis.sort();
    basis.dedup();
    let matrix: Vec<Vec<Q>> =
        psi_rows.values().map(|r| basis.iter().map(|l| r.get(l).cloned().unwrap_or_else(Q::zero)).collect()).collect();
    if linalg::rank(&matrix) < psi_rows.len() {
        return Err(Error::Singular("power-sum rows of the 3-Schur data are dependent".into()));
    }
    // s^(3)_{22} = Σ c_μ ψ_μ
    let mut combo: BTreeMap<Partition, Q> = BTreeMap::new();
    for ((name, mu), c) in rhs {
        if name != "p" || !psi_rows.contains_key(&mu) {
            return Err(Error::Parse(format!("{name}{mu} has no 3-Schur expansion in the data")));
        }
        combo.insert(mu, c / &scale);
    }
    // Δ×ψ_μ = ψ_μ⊗ψ_μ, then both legs are rewritten in 3-Schur functions.
    let mut coproduct: BTreeMap<TensorKey, Q> = BTreeMap::new();
    let mut reconstruction: BTreeMap<Partition, Q> = BTreeMap::new();
    for (mu, c) in &combo {
        let row = &psi_rows[mu];
        for (a, ca) in row {
            *reconstruction.entry(a.clone()).or_insert_with(Q::zero) += c * ca * &scale;
            for (b, cb) in row {
                *coproduct.entry((a.clone(), b.clone())).or_insert_with(Q::zero) += c * ca * cb;
            }
        }
    }
    coproduct.retain(|_, v| !v.is_zero());
    reconstruction.retain(|_, v| !v.is_zero());
    let degree = target.weight();
    let element = combo.iter().try_fold(SymFunc::zero(degree), |acc, (mu, c)| {
        Ok::<_, Error>(&acc + &SymFunc::psi_partition(mu, degree)?.scale(c))
    })?;
    Ok(KSchurAnalysis {
        basis,
        coproduct,
        reconstruction,
        schur_expansion: element.coproduct_mul().to_basis_coeffs(BasisTag::S),
    })
}

pub fn verify_kschur_counterexample() -> Result<VerificationReport> {
    timed("kschur_counterexample", || {
        let a = kschur_analysis()?;
        let target: BTreeMap<Partition, Q> = [(Partition::new(vec![2, 2]), q(12))].into();
        let reconstructs = a.reconstruction == target;
        let negative = a.coproduct.iter().find(|(_, c)| c < &&Q::zero());
        let schur_nonneg = a.schur_expansion.values().all(|c| c >= &Q::zero());
        let ok = reconstructs && negative.is_some() && schur_nonneg;
        let fmt = |m: &BTreeMap<TensorKey, Q>, sym: &str| -> Vec<String> {
            m.iter().map(|((x, y), c)| format!("{c} {sym}{x}⊗{sym}{y}")).collect()
        };
        Ok((
            ok,
            json!({
                "reconstructs_12_ks22": reconstructs,
                "negative_witness": negative.map(|((x, y), c)| json!({"left": x, "right": y, "coef": c.to_string()})),
                "kschur_coordinates": fmt(&a.coproduct, "ks"),
                "schur_nonnegative": schur_nonneg,
                "schur_coordinates": fmt(&a.schur_expansion, "s"),
            }),
        ))
    })
}

fn random_q(rng: &mut impl Rng) -> Q {
    Q::new(BigInt::from(rng.gen_range(-20i64..=20)), BigInt::from(rng.gen_range(1i64..=6)))
}

/// `(a₀, a₁) ↦` the `k = 1` grid with `x₀₀ = a₀`, `x₀₁ = −a₁`.
fn theta_to_grid(p: usize, a: &[Q; 2]) -> Result<PTypWitt> {
    let x01 = -&a[1];
    let x10 = pow(&a[0], p) - q(p as i64) * &x01;
    PTypWitt::from_grid(p, 1, vec![vec![a[0].clone(), x01], vec![x10]])
}

fn grid_to_theta(w: &PTypWitt) -> [Q; 2] {
    [w.entry(0, 0).clone(), -w.entry(0, 1)]
}

pub fn verify_intro_ring_laws(seed: u64, trials: usize) -> Result<VerificationReport> {
    timed("intro_ring_laws", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        let mut constants_ok = true;
        for p in [2usize, 3, 5] {
            let zero = theta_to_grid(p, &[q(0), q(0)])?;
            let one = theta_to_grid(p, &[q(1), q(0)])?;
            constants_ok &= ptypical::grid_to_ghost(&zero)?.components() == [q(0), q(0)];
            constants_ok &= ptypical::grid_to_ghost(&one)?.components() == [q(1), q(1)];
            for _ in 0..trials {
                let a = [random_q(&mut rng), random_q(&mut rng)];
                let b = [random_q(&mut rng), random_q(&mut rng)];
                let (x, y) = (theta_to_grid(p, &a)?, theta_to_grid(p, &b)?);
                let sum = grid_to_theta(&x.add(&y)?);
                let prod = grid_to_theta(&x.mul(&y)?);
                let sum_expected = closed_k1::theta_add(p, [&a[0], &a[1]], [&b[0], &b[1]]);
                let prod_expected = closed_k1::theta_mul(p, [&a[0], &a[1]], [&b[0], &b[1]]);
                if sum != sum_expected || prod != prod_expected {
                    failures.push(json!({
                        "p": p,
                        "a": a.iter().map(Q::to_string).collect::<Vec<_>>(),
                        "b": b.iter().map(Q::to_string).collect::<Vec<_>>(),
                    }));
                }
            }
        }
        let ok = failures.is_empty() && constants_ok;
        Ok((ok, json!({"seed": seed, "trials_per_prime": trials, "constants": constants_ok, "failures": failures})))
    })
}
