//! One function per verb. Each writes its complete output to `out`.

use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use simpdim::barycentric::{limit_constant, pf_eigenvector, refine, refine_fvector};
use simpdim::complex::{dim_inductive, dim_inductive_graph, dim_max, euler_characteristic, join};
use simpdim::experiments::{
    delta_maximizers, dim_avg_level_set, er_survey, log_gaps, rational_grid, refinement_trajectory,
};
use simpdim::genfun::{dim_avg, dim_avg_plus, genus, variance_plus};
use simpdim::io::{complex_to_json, fvector_to_json, rational_to_json, to_graph6};
use simpdim::rational::{decimal_digits, parse as parse_rational, to_decimal};
use simpdim::{Complex, FVector};

use crate::error::{CliError, Result};
use crate::input::Loaded;

/// Decimal places for CSV columns when `--decimal` is not given.
pub const DEFAULT_PLACES: usize = 12;

fn write_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Exact values as "p/q" strings; with `places`, a parallel "decimal" map.
fn rational_fields(
    fields: &[(&str, BigRational)],
    places: Option<usize>,
) -> (Map<String, Value>, Option<Value>) {
    let mut exact = Map::new();
    let mut dec = Map::new();
    for (k, v) in fields {
        exact.insert(k.to_string(), rational_to_json(v));
        if let Some(p) = places {
            dec.insert(k.to_string(), Value::String(to_decimal(v, p)));
        }
    }
    (exact, places.map(|_| Value::Object(dec)))
}

pub fn analyze(
    loaded: &Loaded,
    graph_dim: bool,
    places: Option<usize>,
    out: &mut dyn Write,
) -> Result<()> {
    let g = &loaded.complex;
    let fv = FVector::of(g);
    let poly = fv.gen_poly();
    let one = BigRational::one();
    let ind = dim_inductive(g);
    let ind_plus = ind.clone() + &one;
    let avg_plus = dim_avg_plus(&fv);
    let delta = avg_plus.clone() - ind_plus.clone() / BigInt::from(2);

    let mut fields = vec![
        ("f(1)", poly.eval(&one)),
        ("f(-1)", poly.eval(&-one.clone())),
        ("dim_inductive", ind),
        ("dim_inductive_plus", ind_plus),
    ];
    if graph_dim {
        let gd = dim_inductive_graph(&loaded.skeleton());
        fields.push(("dim_inductive_graph_plus", gd.clone() + &one));
        fields.push(("dim_inductive_graph", gd));
    }
    fields.extend([
        ("dim_avg_plus", avg_plus),
        ("dim_avg", dim_avg(&fv)),
        ("var_plus", variance_plus(&fv)),
        ("delta", delta),
    ]);
    let (mut report, decimal) = rational_fields(&fields, places);
    let dmax = dim_max(g);
    report.insert("f_vector".into(), fvector_to_json(&fv));
    report.insert("gen_poly".into(), json!(poly.to_string()));
    report.insert(
        "euler_characteristic".into(),
        json!(euler_characteristic(g)),
    );
    report.insert("genus".into(), json!(genus(&fv).to_string()));
    report.insert("dim_max".into(), json!(dmax));
    report.insert("max_plus".into(), json!(dmax + 1));
    if let Some(d) = decimal {
        report.insert("decimal".into(), d);
    }
    write_json(out, &Value::Object(report))
}

pub fn join_command(
    a: &Loaded,
    b: &Loaded,
    places: Option<usize>,
    out: &mut dyn Write,
) -> Result<()> {
    let j = join(&a.complex, &b.complex);
    let mut v = complex_to_json(&j);
    let fields = [
        ("dim_avg_plus", dim_avg_plus(&FVector::of(&j))),
        ("dim_avg_plus_left", dim_avg_plus(&FVector::of(&a.complex))),
        ("dim_avg_plus_right", dim_avg_plus(&FVector::of(&b.complex))),
    ];
    let (exact, decimal) = rational_fields(&fields, places);
    let obj = v.as_object_mut().expect("complex JSON is an object");
    obj.extend(exact);
    if let Some(d) = decimal {
        obj.insert("decimal".into(), d);
    }
    write_json(out, &v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefineMode {
    /// Build the order complex `steps` times and print the last one.
    Explicit,
    /// Apply the refinement operator to the f-vector.
    FVector,
}

pub fn refine_command(
    g: &Complex,
    steps: usize,
    mode: RefineMode,
    places: Option<usize>,
    out: &mut dyn Write,
) -> Result<()> {
    match mode {
        RefineMode::Explicit => {
            let mut cur = g.clone();
            for _ in 0..steps {
                cur = refine(&cur)?;
            }
            let mut v = complex_to_json(&cur);
            let (exact, decimal) = rational_fields(
                &[("dim_avg_plus", dim_avg_plus(&FVector::of(&cur)))],
                places,
            );
            let obj = v.as_object_mut().expect("complex JSON is an object");
            obj.insert("steps".into(), json!(steps));
            obj.extend(exact);
            if let Some(d) = decimal {
                obj.insert("decimal".into(), d);
            }
            write_json(out, &v)
        }
        RefineMode::FVector => {
            let mut rows = Vec::new();
            let mut fv = FVector::of(g);
            for step in 0..=steps {
                let (mut row, decimal) =
                    rational_fields(&[("dim_avg_plus", dim_avg_plus(&fv))], places);
                row.insert("step".into(), json!(step));
                row.insert("f_vector".into(), fvector_to_json(&fv));
                if let Some(d) = decimal {
                    row.insert("decimal".into(), d);
                }
                rows.push(Value::Object(row));
                if step < steps {
                    fv = refine_fvector(&fv);
                }
            }
            write_json(out, &Value::Array(rows))
        }
    }
}

/// Note printed once when the table includes d = 0.
pub const ZERO_DIMENSION_NOTE: &str =
    "note: d = 0 is degenerate; refinement fixes 0-dimensional complexes and C_0 = 1 is the formula value";

pub fn constants(
    max_d: usize,
    places: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    writeln!(err, "{ZERO_DIMENSION_NOTE}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "d",
        "c_exact",
        "c_decimal",
        "numer_digits",
        "denom_digits",
        "c_over_d",
    ])?;
    for d in 0..=max_d {
        let c = limit_constant(d);
        let ratio = if d == 0 {
            String::new()
        } else {
            to_decimal(&(c.clone() / BigInt::from(d)), places)
        };
        w.write_record([
            d.to_string(),
            c.to_string(),
            to_decimal(&c, places),
            decimal_digits(c.numer()).to_string(),
            decimal_digits(c.denom()).to_string(),
            ratio,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn constants_json(
    max_d: usize,
    places: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    writeln!(err, "{ZERO_DIMENSION_NOTE}")?;
    let rows: Vec<Value> = (0..=max_d)
        .map(|d| {
            let c = limit_constant(d);
            let mut fields = vec![("c", c.clone())];
            if d > 0 {
                fields.push(("c_over_d", c.clone() / BigInt::from(d)));
            }
            let (mut row, decimal) = rational_fields(&fields, places);
            row.insert("d".into(), json!(d));
            row.insert("numer_digits".into(), json!(decimal_digits(c.numer())));
            row.insert("denom_digits".into(), json!(decimal_digits(c.denom())));
            if let Some(dec) = decimal {
                row.insert("decimal".into(), dec);
            }
            Value::Object(row)
        })
        .collect();
    write_json(out, &Value::Array(rows))
}

/// The Perron–Frobenius probability vector of dimension d as CSV rows
/// (k, probability, discrete derivative p_{k+1} − p_k).
pub fn constants_profile(d: usize, out: &mut dyn Write) -> Result<()> {
    let probs = pf_eigenvector(d).probabilities_f64();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "probability", "derivative"])?;
    for (k, p) in probs.iter().enumerate() {
        let deriv = probs
            .get(k + 1)
            .map_or(String::new(), |q| (q - p).to_string());
        w.write_record([k.to_string(), p.to_string(), deriv])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses `a:b:steps` into the grid a, a + (b−a)/steps, …, b.
pub fn parse_grid(grid: &str) -> Result<Vec<BigRational>> {
    let parts: Vec<&str> = grid.split(':').collect();
    let [a, b, steps] = parts.as_slice() else {
        return Err(CliError::Usage(format!(
            "p-grid must be a:b:steps, got '{grid}'"
        )));
    };
    let a = parse_rational(a)?;
    let b = parse_rational(b)?;
    let steps: usize = steps
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad step count in p-grid '{grid}'")))?;
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::one();
    if steps == 0 || a < zero || b > one || a > b {
        return Err(CliError::Usage(format!(
            "p-grid needs 0 <= a <= b <= 1 and steps >= 1, got '{grid}'"
        )));
    }
    Ok(rational_grid(&a, &b, steps))
}

pub fn survey(
    n: usize,
    grid: &[BigRational],
    samples: u64,
    seed: u64,
    places: usize,
    out: &mut dyn Write,
) -> Result<()> {
    let rows = er_survey(n, grid, samples, seed)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "mean_delta_exact", "mean_delta_decimal", "samples"])?;
    for r in rows {
        w.write_record([
            r.p.to_string(),
            r.mean_delta.to_string(),
            to_decimal(&r.mean_delta, places),
            r.samples.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn enumerate_maximize(
    n: usize,
    graph6: bool,
    places: Option<usize>,
    out: &mut dyn Write,
) -> Result<()> {
    let (graphs, best) = delta_maximizers(n)?;
    if graph6 {
        for g in &graphs {
            writeln!(out, "{}", to_graph6(g))?;
        }
        return Ok(());
    }
    let count = graphs.len();
    let g = &graphs[0];
    let (mut report, decimal) = rational_fields(&[("max_delta", best)], places);
    report.insert("n".into(), json!(n));
    report.insert("maximizer_edges".into(), json!(g.edges()));
    report.insert("maximizer_graph6".into(), json!(to_graph6(g)));
    report.insert(
        "maximizer_f_vector".into(),
        fvector_to_json(&FVector::of(&g.whitney_complex())),
    );
    report.insert("labeled_maximizers".into(), json!(count));
    if let Some(d) = decimal {
        report.insert("decimal".into(), d);
    }
    write_json(out, &Value::Object(report))
}

pub fn enumerate_level_set(
    target: &BigRational,
    max_n: usize,
    graph6: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let found = dim_avg_level_set(target, max_n)?;
    if graph6 {
        for (_, g) in &found {
            writeln!(out, "{}", to_graph6(g))?;
        }
        return Ok(());
    }
    let rows: Vec<Value> = found
        .iter()
        .map(|(fv, g)| json!({ "f_vector": fvector_to_json(fv), "witness_graph6": to_graph6(g) }))
        .collect();
    write_json(
        out,
        &json!({ "dim_avg_plus": rational_to_json(target), "max_n": max_n, "f_vectors": rows }),
    )
}

pub fn trajectory(
    g: &Complex,
    steps: usize,
    log_gap: bool,
    places: usize,
    out: &mut dyn Write,
) -> Result<()> {
    let fv = FVector::of(g);
    let points = refinement_trajectory(&fv, steps);
    let gaps = if log_gap && !fv.is_empty() {
        Some(log_gaps(&points))
    } else {
        None
    };
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![
        "step",
        "f_vector",
        "dim_avg_plus_exact",
        "dim_avg_plus_decimal",
        "var_plus_exact",
        "var_plus_decimal",
    ];
    if gaps.is_some() {
        header.push("log_gap");
    }
    w.write_record(&header)?;
    for (i, p) in points.iter().enumerate() {
        let counts: Vec<String> = p.fvector.counts().iter().map(|c| c.to_string()).collect();
        let mut row = vec![
            p.step.to_string(),
            counts.join(" "),
            p.dim_avg_plus.to_string(),
            to_decimal(&p.dim_avg_plus, places),
            p.variance_plus.to_string(),
            to_decimal(&p.variance_plus, places),
        ];
        if let Some(g) = &gaps {
            row.push(g[i].to_string());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
