use std::fmt::Write as _;

use menhir_core::deformation::{k_add, limit_add};
use menhir_core::disk::boxplus;
use menhir_core::lab::{
    builtin, builtin_candidates, is_consequence, survey_all, test_identity, IdentityCandidate, TestReport, Trial,
    LEFT_ALTERNATIVE, LEFT_BOL,
};
use menhir_core::moller::{embed, project};
use menhir_core::scaling::{box_scale, box_unscale};
use menhir_core::{Algebra, DiskPoint, Product, Velocity};
use serde_json::{json, Value};

use crate::args::{Components, ComposeArgs, IdentitiesArgs, KParam, MenhirArgs, ScaleArgs};
use crate::json::{envelope, num, nums};
use crate::{CliError, Output};

const LIMIT_WARNING: &str =
    "k = inf uses rapidity-vector addition, a derived extrapolation of the k-deformations, not a closed-form limit";

/// Output of `compose`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionResult {
    pub inputs: Vec<Velocity>,
    pub k: KParam,
    pub dim: usize,
    pub result: Velocity,
    pub speed: f64,
    pub rapidity: f64,
    pub fold_order: String,
}

fn velocities(dim: Option<usize>, raw: &[&Components]) -> Result<(usize, Vec<Velocity>), CliError> {
    let n = dim.unwrap_or(raw[0].0.len());
    raw.iter()
        .map(|c| {
            if c.0.len() != n {
                return Err(CliError::Domain(menhir_core::Error::DimensionMismatch {
                    left: n,
                    right: c.0.len(),
                }));
            }
            Ok(Velocity::new(&c.0)?)
        })
        .collect::<Result<Vec<_>, _>>()
        .map(|v| (n, v))
}

fn fold_order(count: usize, op: &str) -> String {
    let mut s = String::from("v1");
    for i in 2..=count {
        s = if i == count { format!("{s} {op} v{i}") } else { format!("({s} {op} v{i})") };
    }
    s
}

pub fn compose(args: &ComposeArgs) -> Result<CompositionResult, CliError> {
    if args.velocities.len() < 2 {
        return Err(CliError::Usage("compose needs at least two --v velocities".into()));
    }
    let raw: Vec<&Components> = args.velocities.iter().collect();
    let (dim, inputs) = velocities(args.dim, &raw)?;
    let points = inputs.iter().map(embed).collect::<Result<Vec<DiskPoint>, _>>()?;
    let mut acc = points[0];
    for p in &points[1..] {
        acc = match args.k {
            KParam::Finite(k) => k_add(k, &acc, p)?,
            KParam::Infinite => limit_add(&acc, p)?,
        };
    }
    let result = project(&acc, dim)?;
    let speed = result.speed();
    Ok(CompositionResult {
        inputs,
        k: args.k,
        dim,
        result,
        speed,
        rapidity: speed.atanh(),
        fold_order: fold_order(args.velocities.len(), "⊕"),
    })
}

fn k_json(k: KParam) -> Value {
    match k {
        KParam::Finite(k) => json!(k),
        KParam::Infinite => json!("inf"),
    }
}

fn vel_list(vs: &[Velocity]) -> Value {
    Value::Array(vs.iter().map(|v| nums(v.components())).collect())
}

fn fmt_vec(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x:.17}")).collect();
    format!("({})", parts.join(", "))
}

pub fn render_compose(r: &CompositionResult, as_json: bool) -> Output {
    let warnings: Vec<String> = match r.k {
        KParam::Infinite => vec![LIMIT_WARNING.to_string()],
        KParam::Finite(_) => Vec::new(),
    };
    if as_json {
        let out = envelope(
            "compose",
            json!({ "velocities": vel_list(&r.inputs) }),
            json!({ "dim": r.dim, "k": k_json(r.k), "fold": "left-to-right" }),
            json!({
                "velocity": nums(r.result.components()),
                "speed": num(r.speed),
                "rapidity": num(r.rapidity),
                "fold_order": r.fold_order,
            }),
            &warnings,
        );
        return Output::new(format!("{out}\n"), warnings);
    }
    let mut s = String::new();
    let _ = writeln!(s, "dim       {}", r.dim);
    let _ = writeln!(s, "k         {}", r.k);
    for (i, v) in r.inputs.iter().enumerate() {
        let _ = writeln!(s, "v{:<8} {}", i + 1, fmt_vec(v.components()));
    }
    let _ = writeln!(s, "fold      {}", r.fold_order);
    let _ = writeln!(s, "result    {}", fmt_vec(r.result.components()));
    let _ = writeln!(s, "speed     {:.17}", r.speed);
    let _ = writeln!(s, "rapidity  {:.17}", r.rapidity);
    Output::new(s, warnings)
}

pub fn menhir(args: &MenhirArgs) -> Result<Output, CliError> {
    let (dim, vs) = velocities(args.dim, &[&args.a, &args.b])?;
    let (a, b) = (embed(&vs[0])?, embed(&vs[1])?);
    let result = project(&boxplus(&a, &b)?, dim)?;
    if args.json {
        let out = envelope(
            "menhir",
            json!({ "a": nums(vs[0].components()), "b": nums(vs[1].components()) }),
            json!({ "dim": dim }),
            json!({ "value": nums(result.components()), "norm": num(result.speed()) }),
            &[],
        );
        return Ok(Output::new(format!("{out}\n"), Vec::new()));
    }
    let text = format!("a ⊞ b     {}\nnorm      {:.17}\n", fmt_vec(result.components()), result.speed());
    Ok(Output::new(text, Vec::new()))
}

pub fn scale(args: &ScaleArgs) -> Result<Output, CliError> {
    let k = match args.k {
        KParam::Finite(k) => k,
        KParam::Infinite => return Err(CliError::Usage("scale needs a finite --k".into())),
    };
    let (dim, vs) = velocities(args.dim, &[&args.v])?;
    let p = embed(&vs[0])?;
    let scaled = if args.inverse { box_unscale(k, &p)? } else { box_scale(k, &p)? };
    let result = project(&scaled, dim)?;
    let op = if args.inverse { format!("(1/{k}) ⊡ v") } else { format!("{k} ⊡ v") };
    if args.json {
        let out = envelope(
            "scale",
            json!({ "v": nums(vs[0].components()) }),
            json!({ "dim": dim, "k": k, "inverse": args.inverse }),
            json!({ "value": nums(result.components()), "norm": num(result.speed()), "operation": op }),
            &[],
        );
        return Ok(Output::new(format!("{out}\n"), Vec::new()));
    }
    let text = format!("{op:<9} {}\nnorm      {:.17}\n", fmt_vec(result.components()), result.speed());
    Ok(Output::new(text, Vec::new()))
}

struct Row {
    candidate: IdentityCandidate,
    report: TestReport,
    derivable: Option<bool>,
}

fn row_json(row: &Row) -> Value {
    let witness = match &row.report.witness {
        Some(w) => Value::Array(w.iter().map(|p| nums(p.coeffs())).collect()),
        None => Value::Null,
    };
    let mut v = json!({
        "identity": row.candidate.render_text(),
        "name": row.candidate.name,
        "holds": row.report.holds,
        "max_residual": num(row.report.max_residual),
        "witness": witness,
        "witness_residual": row.report.witness_residual.map(num),
    });
    if let Some(d) = row.derivable {
        v["derivable_from_ii_iii"] = json!(d);
    }
    v
}

fn table(rows: &[Row], out: &mut String) {
    let width = rows.iter().map(|r| r.candidate.render_text().chars().count()).max().unwrap_or(0).max(8);
    let _ = writeln!(out, "{:<width$}  {:<18}  {:<5}  {:>12}  witness", "identity", "name", "holds", "max_residual");
    for r in rows {
        let witness = match &r.report.witness {
            Some(w) => w.iter().map(|p| fmt_short(p.coeffs())).collect::<Vec<_>>().join(" "),
            None => "-".into(),
        };
        let _ = writeln!(
            out,
            "{:<width$}  {:<18}  {:<5}  {:>12.3e}  {}",
            r.candidate.render_text(),
            r.candidate.name.as_deref().unwrap_or("-"),
            if r.report.holds { "yes" } else { "no" },
            r.report.max_residual,
            witness
        );
    }
}

fn fmt_short(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x:.4}")).collect();
    format!("({})", parts.join(","))
}

pub fn identities(args: &IdentitiesArgs) -> Result<Output, CliError> {
    if args.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if !(args.tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let algebra: Algebra = args.algebra.into();
    let product = Product::from_k(match args.k {
        KParam::Finite(k) => Some(k),
        KParam::Infinite => None,
    })?;
    let trial = Trial::new(algebra, product).samples(args.samples).tol(args.tol).seed(args.seed);
    let run_builtin = args.builtin || args.survey.is_none();

    let builtin_rows = if run_builtin {
        builtin_candidates()
            .into_iter()
            .map(|c| {
                let report = test_identity(&c, &trial)?;
                Ok(Row { candidate: c, report, derivable: None })
            })
            .collect::<Result<Vec<_>, CliError>>()?
    } else {
        Vec::new()
    };

    let mut survey = None;
    if let Some(n) = args.survey {
        let laws = [builtin(LEFT_ALTERNATIVE).expect("builtin"), builtin(LEFT_BOL).expect("builtin")];
        let all = survey_all(n as usize, &trial)?;
        let tested = all.len();
        let holders: Vec<Row> = all
            .into_iter()
            .filter(|(_, r)| r.holds)
            .map(|(mut c, report)| {
                if let Some(b) = builtin_candidates().into_iter().find(|b| b.same_law(&c)) {
                    c.name = b.name;
                }
                let derivable = Some(is_consequence(&c, &laws));
                Row { candidate: c, report, derivable }
            })
            .collect();
        survey = Some((n, tested, holders));
    }

    let mut warnings = Vec::new();
    if product == Product::Limit {
        warnings.push(LIMIT_WARNING.to_string());
    }

    if args.json {
        let mut result = serde_json::Map::new();
        if run_builtin {
            result.insert("builtin".into(), Value::Array(builtin_rows.iter().map(row_json).collect()));
        }
        if let Some((n, tested, holders)) = &survey {
            result.insert(
                "survey".into(),
                json!({
                    "letters": n,
                    "candidates_tested": tested,
                    "holders": Value::Array(holders.iter().map(row_json).collect()),
                }),
            );
        }
        let out = envelope(
            "identities",
            json!({ "algebra": algebra.code().to_string() }),
            json!({
                "product": product.to_string(),
                "k": k_json(args.k),
                "samples": args.samples,
                "tol": num(args.tol),
                "seed": args.seed,
                "max_radius": num(menhir_core::sample::DEFAULT_MAX_RADIUS),
            }),
            Value::Object(result),
            &warnings,
        );
        return Ok(Output::new(format!("{out}\n"), warnings));
    }

    let mut s = String::new();
    let _ = writeln!(
        s,
        "algebra {algebra}, product {product}, {} samples, tol {:e}, seed {}",
        args.samples, args.tol, args.seed
    );
    if run_builtin {
        let _ = writeln!(s, "\nbuiltin identities");
        table(&builtin_rows, &mut s);
    }
    if let Some((n, tested, holders)) = &survey {
        let _ = writeln!(s, "\nsurvey of {n}-letter bracketings: {} of {tested} candidates hold", holders.len());
        table(holders, &mut s);
        let underived = holders.iter().filter(|r| r.derivable == Some(false)).count();
        let _ = writeln!(s, "holders not derivable from (ii) and (iii): {underived}");
    }
    Ok(Output::new(s, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold_order_text() {
        assert_eq!(fold_order(2, "⊕"), "v1 ⊕ v2");
        assert_eq!(fold_order(3, "⊕"), "(v1 ⊕ v2) ⊕ v3");
        assert_eq!(fold_order(4, "⊕"), "((v1 ⊕ v2) ⊕ v3) ⊕ v4");
    }
}
