//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::*;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Left-aligned columns separated by two spaces.
fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<String>| {
        let s: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(s.join("  ").trim_end());
        out.push('\n');
    };
    line(header.iter().map(|s| s.to_string()).collect());
    for r in rows {
        line(r.clone());
    }
    out
}

fn witness_lines(out: &mut String, w: &Witness) {
    let [a, b, c, d] = &w.gamma;
    let _ = writeln!(out, "witness: ({a}, {b}; {c}, {d})");
    let _ = writeln!(
        out,
        "det: {} ({})",
        w.det,
        if w.det_is_square {
            "square"
        } else {
            "non-square"
        }
    );
    let _ = writeln!(out, "fixed points: z^2 + ({})*z + ({})", w.quad_b, w.quad_c);
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    match &r.payload {
        Payload::Parity(p) => {
            let _ = writeln!(
                out,
                "group: {}  q={}  deg-bound: {}",
                p.group, r.q, p.deg_bound
            );
            let _ = writeln!(out, "classification: {}", p.classification);
            let _ = writeln!(out, "witnesses found: {}", p.witness_count);
            if let Some(i) = p.stabilizer_index {
                let _ = writeln!(out, "stabilizer index: {i}");
            }
            if let Some(w) = &p.witness {
                witness_lines(&mut out, w);
            }
        }
        Payload::Ellsearch(e) => {
            let _ = writeln!(
                out,
                "group: {}  q={}  deg-bound: {}",
                e.group, r.q, e.deg_bound
            );
            let rows: Vec<Vec<String>> = e
                .witnesses
                .iter()
                .map(|w| {
                    let [a, b, c, d] = &w.gamma;
                    vec![
                        format!("({a}, {b}; {c}, {d})"),
                        w.det.clone(),
                        yes(w.det_is_square).into(),
                        w.quad_b.clone(),
                        w.quad_c.clone(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["gamma", "det", "square", "b", "c"], &rows));
            let _ = writeln!(
                out,
                "{} witnesses in {} classes",
                e.witnesses.len(),
                e.classes.len()
            );
        }
        Payload::Cusps(c) => {
            let _ = writeln!(
                out,
                "group: {}  level: {}  primitive vectors: {}",
                c.group, c.level, c.primitive_vectors
            );
            let _ = writeln!(out, "cusps: {}", c.count);
            let rows: Vec<Vec<String>> = c
                .reps
                .iter()
                .zip(&c.orbit_sizes)
                .map(|([x, y], n)| vec![format!("({x},{y})"), n.to_string()])
                .collect();
            out.push_str(&grid(&["rep", "orbit"], &rows));
        }
        Payload::Dims(d) => {
            let _ = writeln!(out, "preset: {}  q={}  D = {}", d.preset, r.q, d.divisor);
            let rows: Vec<Vec<String>> = d
                .rows
                .iter()
                .map(|x| {
                    vec![
                        x.k.to_string(),
                        x.l.to_string(),
                        x.dim.to_string(),
                        opt(&x.h0),
                        x.agree.map_or("-", yes).to_string(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["k", "l", "dim", "h0", "agree"], &rows));
            out.push('\n');
            let rows: Vec<Vec<String>> = d
                .totals
                .iter()
                .map(|x| {
                    vec![
                        x.k.to_string(),
                        x.dim_sum.to_string(),
                        x.h0.to_string(),
                        yes(x.agree).into(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["k", "sum dim", "h0((k/2)D)", "agree"], &rows));
        }
        Payload::Sectionring(s) => {
            let _ = writeln!(
                out,
                "preset: {}  q={}  max weight: {}  D = {}",
                s.preset, r.q, s.max_weight, s.divisor
            );
            let rows: Vec<Vec<String>> = s
                .generators
                .iter()
                .map(|g| vec![g.name.clone(), g.weight.to_string(), g.section.clone()])
                .collect();
            out.push_str(&grid(&["generator", "weight", "section"], &rows));
            if s.relations.is_empty() {
                out.push_str("no relations\n");
            }
            for rel in &s.relations {
                let _ = writeln!(
                    out,
                    "relation (weight {}): {}",
                    rel.weight, rel.monomial_combination
                );
            }
        }
        Payload::Split(s) => {
            let _ = writeln!(out, "input: {}  (k={})", s.input, s.k);
            let _ = writeln!(out, "f1 = {}  type {}", s.f1.series, s.f1.type_residue);
            let _ = writeln!(out, "f2 = {}  type {}", s.f2.series, s.f2.type_residue);
        }
        Payload::Valence(v) => {
            let _ = writeln!(
                out,
                "k={} v_inf={} v_e={} v_other={:?}: {}",
                v.k,
                v.v_inf,
                v.v_e,
                v.v_other,
                if v.holds { "holds" } else { "fails" }
            );
        }
        Payload::Selfcheck(s) => {
            let _ = writeln!(out, "seed: {}", s.seed);
            let rows: Vec<Vec<String>> = s
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        c.samples.to_string(),
                        c.failures.to_string(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["check", "samples", "failures"], &rows));
        }
    }
    out
}
