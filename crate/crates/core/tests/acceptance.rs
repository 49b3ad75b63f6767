//! Acceptance criteria, one line each. Every criterion is evaluated even when
//! an earlier one fails; the test fails if any line reads FAIL.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use copol_core::cases::{theorem_main, CaseId, ScanConfig, Status, Tag};
use copol_core::certificate::{diophantine_empty, DiophantineConstraint};
use copol_core::cli::run_cli;
use copol_core::fixed_space::{
    annihilator_fixed_dim, element_fixed_dim, element_fixed_dim_oracle, involution_fixed_dim,
    Involution, InvolutionKind, Mode, Sign, TorusElement,
};
use copol_core::irrep::{
    character_polynomial, freudenthal_diagram, su3_shells, weyl_dim, IrrepDescriptor,
};
use copol_core::report::{theorem_json, Baseline};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const C1_LIMIT: Duration = Duration::from_secs(10);
const C2_LIMIT: Duration = Duration::from_secs(1);
const C4_LIMIT: Duration = Duration::from_secs(60);
const C6_LIMIT: Duration = Duration::from_secs(1);
const C7_LIMIT: Duration = Duration::from_secs(10);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn c1_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut largest = 0;
    for a in 0..=8 {
        for b in 0..=8 {
            let rep = IrrepDescriptor::su3(a, b).map_err(|e| e.to_string())?;
            let d = freudenthal_diagram(&rep).map_err(|e| e.to_string())?;
            let chi = character_polynomial(&rep).map_err(|e| e.to_string())?;
            let from_chi: BTreeMap<_, u64> = chi
                .terms()
                .iter()
                .map(|(w, &c)| (w.clone(), c as u64))
                .collect();
            check(chi.terms().values().all(|&c| c > 0), || format!("({a},{b}) negative coefficient"))?;
            check(d.entries == from_chi, || format!("({a},{b}) maps differ"))?;
            largest = largest.max(d.complex_dim);
        }
    }
    let t = within(C1_LIMIT, start)?;
    Ok(format!("81 highest weights, largest dim {largest}, {t:.2?}"))
}

fn c2_dimension_consistency() -> Outcome {
    let start = Instant::now();
    for a in 0..=8 {
        for b in 0..=8 {
            let rep = IrrepDescriptor::su3(a, b).map_err(|e| e.to_string())?;
            let d = freudenthal_diagram(&rep).map_err(|e| e.to_string())?;
            let w = weyl_dim(&rep).map_err(|e| e.to_string())?;
            check(d.complex_dim == w, || format!("({a},{b}): {} vs {w}", d.complex_dim))?;
            if a <= 6 && b <= 6 {
                let shells = su3_shells(a, b).map_err(|e| e.to_string())?;
                check(shells.complex_dim() == w, || format!("({a},{b}) shells"))?;
                let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
                for m in d.entries.values() {
                    *hist.entry(*m).or_default() += 1;
                }
                let mut from_shells: BTreeMap<u64, u64> = BTreeMap::new();
                for s in &shells.shells {
                    *from_shells.entry(s.multiplicity).or_default() += s.weight_count;
                }
                check(hist == from_shells, || format!("({a},{b}) shell multiplicities"))?;
            }
        }
    }
    let t = within(C2_LIMIT, start)?;
    Ok(format!("weyl_dim on a,b <= 8, shells on a,b <= 6, {t:.2?}"))
}

fn c3_zero_weight() -> Outcome {
    for a in 0..=6 {
        let d = freudenthal_diagram(&IrrepDescriptor::su3(a, a).unwrap()).map_err(|e| e.to_string())?;
        let z = d.zero_weight_multiplicity();
        check(z == (a + 1) as u64, || format!("pi_({a},{a}) zero weight {z}"))?;
    }
    Ok("a = 0..6".into())
}

/// Grid: every `SU(3)` diagonal element `diag(ζ^{d1}, ζ^{d2}, ζ^{d3})` with
/// `d1 + d2 + d3 ≡ 0 (mod N)`, `N ≤ 12`, on `π_{a,b}`, `a, b ≤ 5`; plus
/// coroot-basis elements of `U(3)` with exponents in `[0, N)³`, `N ≤ 6`, on
/// `a, b ≤ 3`.
fn c4_fixed_space_dual_path() -> Outcome {
    let start = Instant::now();
    let mut count = 0u64;
    for a in 0..=5 {
        for b in 0..=5 {
            let rep = IrrepDescriptor::su3(a, b).unwrap();
            let d = freudenthal_diagram(&rep).map_err(|e| e.to_string())?;
            for n in 1..=12u64 {
                let ni = n as i64;
                for d1 in 0..ni {
                    for d2 in 0..ni {
                        let d3 = (-(d1 + d2)).rem_euclid(ni);
                        let h = TorusElement::diagonal([d1, d2, d3], n).unwrap();
                        let fast = element_fixed_dim(&d, &h).map_err(|e| e.to_string())?.complex_dim;
                        let slow = element_fixed_dim_oracle(&rep, &h).map_err(|e| e.to_string())?;
                        check(fast == slow, || format!("({a},{b}) {h:?}: {fast} vs {slow}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    for a in 0..=3 {
        for b in 0..=3 {
            let rep = IrrepDescriptor::u3(a, b).unwrap();
            let d = freudenthal_diagram(&rep).map_err(|e| e.to_string())?;
            for n in 1..=6i64 {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let h = TorusElement::coroot(vec![x, y, z], n as u64).unwrap();
                            let fast = element_fixed_dim(&d, &h).map_err(|e| e.to_string())?.complex_dim;
                            let slow = element_fixed_dim_oracle(&rep, &h).map_err(|e| e.to_string())?;
                            check(fast == slow, || format!("U3 ({a},{b}) {h:?}"))?;
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    let t = within(C4_LIMIT, start)?;
    Ok(format!("{count} (rep, element) pairs, {t:.2?}"))
}

/// Fixed dimension of a signed permutation `P` with `P² = 1`: one per fixed
/// basis vector with sign `+`, one per 2-cycle.
fn signed_permutation_fixed_dim(image: &[(usize, i64)]) -> u64 {
    let mut dim = 0;
    for (i, &(j, s)) in image.iter().enumerate() {
        assert_eq!(image[j].0, i, "not an involution");
        if (j == i && s == 1) || j > i {
            dim += 1;
        }
    }
    dim
}

/// Realified basis of `ℂ^m ⊗ ℂ^n`: index `2(i n + j) + k`, `k = 0` for
/// `e_i ⊗ f_j` and `k = 1` for `√−1 e_i ⊗ f_j`.
fn involution_brute_force(m: usize, n: usize, kind: Involution, sign: Sign) -> u64 {
    let s = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let mut image = vec![(0, 0); 2 * m * n];
    for i in 0..m {
        for j in 0..n {
            for k in 0..2 {
                let (ti, tj) = match kind {
                    Involution::Swap | Involution::SwapConj => (j, i),
                    Involution::Conj => (i, j),
                };
                let conj = matches!(kind, Involution::SwapConj | Involution::Conj);
                let phase = if conj && k == 1 { -1 } else { 1 };
                image[2 * (i * n + j) + k] = (2 * (ti * n + tj) + k, s * phase);
            }
        }
    }
    signed_permutation_fixed_dim(&image)
}

fn c5_involutions() -> Outcome {
    for n in 1..=8usize {
        for sign in [Sign::Plus, Sign::Minus] {
            for kind in [Involution::Swap, Involution::SwapConj] {
                let got = involution_fixed_dim(n as i64, n as i64, InvolutionKind::new(kind, sign)).unwrap();
                let want = involution_brute_force(n, n, kind, sign);
                check(got == want, || format!("{kind:?} {sign:?} n={n}: {got} vs {want}"))?;
            }
            for m in 1..=8usize {
                let got = involution_fixed_dim(m as i64, n as i64, InvolutionKind::new(Involution::Conj, sign)).unwrap();
                let want = involution_brute_force(m, n, Involution::Conj, sign);
                check(got == want, || format!("Conj {sign:?} ({m},{n}): {got} vs {want}"))?;
            }
        }
    }
    Ok("SWAP, SWAP_CONJ, CONJ with both signs, n <= 8".into())
}

fn c6_diophantine() -> Outcome {
    let start = Instant::now();
    for c in [
        DiophantineConstraint::N2PlusNEq4,
        DiophantineConstraint::N2MinusNEq4,
        DiophantineConstraint::N2Eq5,
    ] {
        let r = diophantine_empty(c, 1_000_000).map_err(|e| e.to_string())?;
        check(r.solutions.is_empty(), || format!("{c}: {:?}", r.solutions))?;
        let cert = &r.certificate;
        check(
            cert.value_below < c.target() && cert.value_above > c.target() && cert.forward_difference > 0,
            || format!("{c}: certificate {cert:?}"),
        )?;
        check(c.eval(cert.first_above) == cert.value_above, || format!("{c}: value"))?;
    }
    let t = within(C6_LIMIT, start)?;
    Ok(format!("bound 10^6, {t:.2?}"))
}

fn c7_case_reproduction() -> Outcome {
    let start = Instant::now();
    let t = theorem_main(Mode::PaperBound, ScanConfig::default()).map_err(|e| e.to_string())?;
    let elapsed = within(C7_LIMIT, start)?;
    let baseline = Baseline::builtin();
    check(t.reports.len() == CaseId::ALL.len(), || format!("{} reports", t.reports.len()))?;
    let mut failures = Vec::new();
    for r in &t.reports {
        let diff = baseline.diff(r);
        if r.status() != Status::Pass || !diff.is_empty() {
            failures.push(format!(
                "{} unexpected [{}] missing [{}]",
                r.case_id,
                diff.unexpected.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; "),
                diff.missing.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; ")
            ));
        }
    }
    let report = |id: CaseId| t.reports.iter().find(|r| r.case_id == id).unwrap();
    let conj = report(CaseId::C7DiscConj);
    if conj.fact("dim V") != Some(12) {
        failures.push("C7-DISC-CONJ dim V != 12".into());
    }
    if report(CaseId::C8Conn).non_polar_survivors().count() != 0 {
        failures.push("C8-CONN has non-polar survivors".into());
    }
    if report(CaseId::C8DiscOuter).fact("dim V") != Some(12) {
        failures.push("C8-DISC-OUTER dim V != 12".into());
    }
    let inner = report(CaseId::C8DiscInner);
    let (h2, h4) = (inner.fact("dim V^h at a = 2"), inner.fact("dim V^h at a = 4"));
    if !(h2.is_some_and(|v| v >= 9) && h4.is_some_and(|v| v > 5)) {
        failures.push(format!("C8-DISC-INNER dim V^h values {h2:?}, {h4:?}"));
    }
    if report(CaseId::C9Disc).fact("dim V") != Some(14) {
        failures.push("C9-DISC dim V != 14".into());
    }
    if failures.is_empty() {
        Ok(format!("{} reports PASS, {elapsed:.2?}", t.reports.len()))
    } else {
        Err(failures.join(" | "))
    }
}

fn c8_theorem_aggregate() -> Outcome {
    let t = theorem_main(Mode::PaperBound, ScanConfig::default()).map_err(|e| e.to_string())?;
    let families: Vec<String> = t
        .surviving_families
        .iter()
        .map(|(id, s)| format!("{id}: {s}"))
        .collect();
    check(
        t.surviving_families.len() == 1 && t.status() == Status::Pass,
        || format!("surviving families [{}]", families.join("; ")),
    )?;
    Ok(families.join("; "))
}

fn c9_exact_audit() -> Outcome {
    let cfg = ScanConfig::default();
    let first = theorem_main(Mode::Exact, cfg).map_err(|e| e.to_string())?;
    let second = theorem_main(Mode::Exact, cfg).map_err(|e| e.to_string())?;
    check(first == second, || "EXACT runs differ".into())?;
    check(theorem_json(&first) == theorem_json(&second), || "EXACT JSON differs".into())?;
    let mut n = 0;
    for r in &first.reports {
        for d in &r.discrepancies {
            n += 1;
            let circle = matches!(r.case_id, CaseId::C7Conn | CaseId::C8Conn | CaseId::C9Conn);
            if !circle {
                continue;
            }
            let w = d.witness.as_ref().ok_or_else(|| format!("{}: {d} has no witness", r.case_id))?;
            let diagram = d.family.diagram(&d.params).map_err(|e| e.to_string())?;
            let v = annihilator_fixed_dim(&diagram, w).map_err(|e| e.to_string())?.real_dim;
            check(v == d.exact_value, || format!("{d}: witness gives {v}"))?;
        }
        for s in &r.survivors {
            check(s.tag == Tag::Survivor || s.tag == Tag::PolarByAxiom, || "tag".into())?;
        }
    }
    Ok(format!("deterministic, {n} discrepancies, witnesses verified"))
}

fn c10_determinism() -> Outcome {
    let args = ["verify", "--mode", "paper", "--format", "json"];
    let env = BTreeMap::new();
    let (c1, o1) = run_cli(&args, &env);
    let (c2, o2) = run_cli(&args, &env);
    check(c1 == c2 && o1 == o2, || "outputs differ".into())?;
    let v: serde_json::Value = serde_json::from_str(&o1).map_err(|e| e.to_string())?;
    check(v["reports"].as_array().map(|r| r.len()) == Some(CaseId::ALL.len()), || "report count".into())?;
    Ok(format!("{} bytes, exit {c1}", o1.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 Freudenthal equals Weyl character, a,b <= 8", c1_oracle_equivalence),
        ("2 dimension and shell consistency", c2_dimension_consistency),
        ("3 zero weight multiplicity a+1, a <= 6", c3_zero_weight),
        ("4 fixed-space dual path, order <= 12", c4_fixed_space_dual_path),
        ("5 involution closed forms, n <= 8", c5_involutions),
        ("6 Diophantine exclusions to 10^6", c6_diophantine),
        ("7 case reproduction, PAPER_BOUND", c7_case_reproduction),
        ("8 theorem aggregate", c8_theorem_aggregate),
        ("9 EXACT audit", c9_exact_audit),
        ("10 byte-identical JSON", c10_determinism),
    ];
    let mut lines = Vec::new();
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let line = match outcome {
            Ok(detail) => format!("PASS  {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                format!("FAIL  {name}: {reason}")
            }
        };
        println!("{line}");
        lines.push(line);
    }
    assert!(failed == 0, "{failed} criteria failed\n{}", lines.join("\n"));
}
