//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{
    AnalysisReport, Check, Exact, FuzzSummary, SpectrumAtom, Status, TensorReport,
};

fn exact(e: &Exact) -> String {
    if e.den == "1" {
        e.num.clone()
    } else {
        format!("{}/{}", e.num, e.den)
    }
}

fn polynomial(coeffs: &[Exact], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| c.num != "0")
        .map(|(i, c)| {
            let coeff = match (i, c.den.as_str(), c.num.as_str()) {
                (0, _, _) => return exact(c),
                (_, "1", "1") => String::new(),
                (_, "1", _) => c.num.clone(),
                _ => format!("({})", exact(c)),
            };
            match i {
                1 => format!("{coeff}{var}"),
                _ => format!("{coeff}{var}^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

fn vector(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", items.join(", "))
}

fn spectrum(atoms: &[SpectrumAtom]) -> String {
    let items: Vec<String> = atoms
        .iter()
        .map(|a| format!("{}:{}", exact(&a.exponent), a.multiplicity))
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn checks(out: &mut String, checks: &[Check]) {
    for c in checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A ",
        };
        let _ = write!(out, "  [{tag}] {}", c.name);
        if !c.reasons.is_empty() {
            let _ = write!(out, ": {}", c.reasons.join("; "));
        }
        out.push('\n');
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let source = r.input.path.as_deref().unwrap_or("<generated>");
    let _ = writeln!(out, "input      {source} ({}, n = {})", r.input.kind, r.dim);
    if let Some(p) = &r.polytope {
        let _ = writeln!(
            out,
            "polytope   {} vertices, {} facets, simplicial: {}, reflexive: {}",
            p.vertices.len(),
            p.facets.len(),
            p.simplicial,
            p.reflexive
        );
        let _ = writeln!(out, "volume     {}", p.normalized_volume);
        let _ = writeln!(out, "delta      {}", vector(&p.delta));
        let _ = writeln!(out, "L_P(m)     {}", polynomial(&p.ehrhart_polynomial, "m"));
    }
    let _ = writeln!(out, "mu         {}", r.mu);
    let _ = writeln!(out, "spectrum   {}", spectrum(&r.spectrum));
    let _ = writeln!(out, "theta      {}", vector(&r.theta));
    for c in &r.theta_classes {
        let _ = writeln!(
            out,
            "  alpha = {:<6} theta {}  L = {}",
            exact(&c.alpha),
            vector(&c.theta),
            polynomial(&c.polynomial, "X")
        );
    }
    let _ = writeln!(out, "L_psi(X)   {}", polynomial(&r.hodge_ehrhart, "X"));
    let cl = &r.classification;
    let _ = writeln!(
        out,
        "class      {}, roots on {}, trivial roots {:?}",
        cl.kind, cl.root_line, cl.trivial_roots
    );
    let roots: Vec<String> = r
        .roots
        .iter()
        .map(|z| match z.im.strip_prefix('-') {
            Some(im) => format!("{} - {im}i", z.re),
            None => format!("{} + {}i", z.re, z.im),
        })
        .collect();
    let _ = writeln!(
        out,
        "roots      {}",
        if roots.is_empty() {
            String::from("none")
        } else {
            roots.join(", ")
        }
    );
    let rf = &r.root_factorization;
    if rf.applicable {
        let _ = writeln!(
            out,
            "kronecker  k = {}, r = {}, linear roots {:?}, quotient on Re X = {}: {}",
            rf.k.unwrap_or(0),
            rf.r.unwrap_or(0),
            rf.linear_roots,
            rf.predicted_line.as_ref().map(exact).unwrap_or_default(),
            rf.quotient_on_line.unwrap_or(false)
        );
    } else if let Some(reason) = &rf.reason {
        let _ = writeln!(out, "kronecker  not applicable: {reason}");
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning    {w}");
    }
    let _ = writeln!(out, "checks");
    checks(&mut out, &r.checks);
    let _ = writeln!(
        out,
        "result     {}",
        if r.passed() { "pass" } else { "FAIL" }
    );
    out
}

pub fn tensor(r: &TensorReport) -> String {
    let mut out = String::new();
    for (i, input) in r.inputs.iter().enumerate() {
        let _ = writeln!(
            out,
            "factor {}   {} ({})",
            i + 1,
            input.path.as_deref().unwrap_or("<generated>"),
            input.kind
        );
    }
    if r.forced {
        let _ = writeln!(
            out,
            "warning    reflexivity guard bypassed; theta is not multiplicative here"
        );
    }
    let _ = writeln!(out, "spectrum   {}", spectrum(&r.spectrum));
    let _ = writeln!(out, "theta      {}", vector(&r.theta));
    let _ = writeln!(out, "checks");
    checks(&mut out, &r.checks);
    if let Some(a) = &r.analysis {
        let _ = writeln!(out, "\nsum");
        out.push_str(&analysis(a));
    } else {
        let _ = writeln!(
            out,
            "result     {}",
            if r.passed() { "pass" } else { "FAIL" }
        );
    }
    out
}

pub fn fuzz(s: &FuzzSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "fuzz seed {} count {} dim-max {}: {} passed, {} failed ({:.0} ms)",
        s.seed, s.count, s.dim_max, s.passed, s.failed, s.timing.elapsed_ms
    );
    for f in &s.failures {
        let _ = writeln!(out, "#{} vertices {:?}", f.index, f.vertices);
        checks(&mut out, &f.failed_checks);
    }
    out
}
