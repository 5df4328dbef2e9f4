use serde::Serialize;
use serde_json::Value;

use subspace_ca::ca::{normalize_monic, rule_from_kernel};
use subspace_ca::codes::{
    construction_uniform_gcd, gauss_count, max_coprime_family_size,
    max_coprime_family_size_literal, search_max_family, search_max_uniform_gcd,
    uniform_gcd_family_size, uniform_gcd_family_size_literal, CaFamily, GcdProfile,
    IrreducibleCount,
};
use subspace_ca::format::{
    code_from_file, code_to_file, format_polynomial, matrix_to_json, parse_field_spec,
    parse_polynomial, CodeFile, MatrixJson,
};
use subspace_ca::netsim::{simulate_with, ChannelConfig, SimulationStats};
use subspace_ca::subspace::CodeParams;
use subspace_ca::{Exec, GrassmannianCode, LinearCa, LinearRule, Polynomial};

use crate::output::CliError;
use crate::{AnalyzeArgs, BuildCodeArgs, CountArgs, KernelArgs, SearchMaxArgs, SimulateArgs};

/// Result of a subcommand: the JSON body, an optional CSV table and files to write.
pub struct Report {
    /// Field spec when it is only known after reading input.
    pub field: Option<String>,
    pub body: Value,
    pub csv: Option<String>,
    /// `(path, document)`; a null document means the full rendered output.
    pub files: Vec<(String, Value)>,
}

impl Report {
    fn new(body: impl Serialize) -> Report {
        Report {
            field: None,
            body: serde_json::to_value(body).expect("report serializes"),
            csv: None,
            files: Vec::new(),
        }
    }

    fn csv(mut self, header: &str, rows: impl IntoIterator<Item = String>) -> Report {
        let mut out = String::from(header);
        out.push('\n');
        for r in rows {
            out.push_str(&r);
            out.push('\n');
        }
        self.csv = Some(out);
        self
    }
}

#[derive(Serialize)]
struct PolyOut {
    coefficients: String,
    display: String,
}

impl From<&Polynomial> for PolyOut {
    fn from(p: &Polynomial) -> PolyOut {
        PolyOut {
            coefficients: format_polynomial(p),
            display: p.to_string(),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn read_code(path: &str) -> Result<GrassmannianCode, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let mut doc: Value = serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))?;
    if let Some(inner) = doc.get_mut("code").filter(|c| c.is_object()) {
        doc = inner.take();
    }
    let file: CodeFile = serde_json::from_value(doc).map_err(|e| CliError::Json(e.to_string()))?;
    Ok(code_from_file(&file)?)
}

#[derive(Serialize)]
struct KernelOut {
    rule: PolyOut,
    k: usize,
    n: usize,
    dim: usize,
    transition_matrix: MatrixJson,
    kernel: MatrixJson,
}

pub fn kernel(a: &KernelArgs) -> Result<Report, CliError> {
    let field = parse_field_spec(&a.q)?;
    let poly = parse_polynomial(&field, &a.poly)?;
    let rule = LinearRule::new(normalize_monic(&poly)?)?;
    let ca = LinearCa::new(rule, a.n)?;
    let ker = ca.kernel();
    let rows: Vec<String> = ker
        .rows_as_values()
        .iter()
        .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    let out = KernelOut {
        rule: ca.rule().polynomial().into(),
        k: ca.rule().k(),
        n: a.n,
        dim: ker.dim(),
        transition_matrix: matrix_to_json(&ca.transition_matrix()),
        kernel: matrix_to_json(ker.basis()),
    };
    Ok(Report::new(out).csv(
        "row,vector",
        rows.into_iter()
            .enumerate()
            .map(|(i, r)| format!("{i},{r}")),
    ))
}

#[derive(Serialize)]
struct BuildCodeOut {
    k: usize,
    t: usize,
    gcd: PolyOut,
    family: Vec<PolyOut>,
    family_size: usize,
    formula_size: u128,
    formula_size_literal: u128,
    predicted_min_distance: Option<usize>,
    gcd_profile: Option<GcdProfile>,
    params: CodeParams,
    code: CodeFile,
}

pub fn build_code(a: &BuildCodeArgs) -> Result<Report, CliError> {
    let field = parse_field_spec(&a.q)?;
    let g = parse_polynomial(&field, &a.gcd)?;
    let polys = construction_uniform_gcd(a.k, &g)?;
    let t = g.degree().expect("construction accepted g");
    let family = CaFamily::new(polys.clone())?;
    let code = family.code().code;
    let (predicted, profile) = match family.predicted_min_distance() {
        Ok((d, p)) => (Some(d), Some(p)),
        Err(_) => (None, None),
    };
    let file = code_to_file(&code);
    let out = BuildCodeOut {
        k: a.k,
        t,
        gcd: (&g).into(),
        family: polys.iter().map(PolyOut::from).collect(),
        family_size: polys.len(),
        formula_size: uniform_gcd_family_size(a.k as u64, t as u64, &field)?,
        formula_size_literal: uniform_gcd_family_size_literal(a.k as u64, t as u64, &field)?,
        predicted_min_distance: predicted,
        gcd_profile: profile,
        params: code.params()?,
        code: file.clone(),
    };
    let mut report = Report::new(out).csv(
        "index,coefficients,display",
        polys.iter().enumerate().map(|(i, p)| {
            format!(
                "{i},{},{}",
                quote(&format_polynomial(p)),
                quote(&p.to_string())
            )
        }),
    );
    if let Some(path) = &a.out {
        report.files.push((
            path.clone(),
            serde_json::to_value(&file).expect("code file serializes"),
        ));
    }
    Ok(report)
}

#[derive(Serialize)]
struct AnalyzeOut {
    params: CodeParams,
    constant_dim: Option<usize>,
    rules: Vec<Option<PolyOut>>,
    gcd_profile: Option<GcdProfile>,
    predicted_min_distance: Option<usize>,
    pairwise_distances: Vec<[usize; 3]>,
    equidistant: bool,
}

pub fn analyze(a: &AnalyzeArgs) -> Result<Report, CliError> {
    let code = read_code(&a.code)?;
    let params = code.params()?;
    let rules: Vec<Option<LinearRule>> = code.codewords().iter().map(rule_from_kernel).collect();
    let n = code.ambient_dim();
    // the gcd law describes codes of kernels at length 2k
    let family = rules
        .iter()
        .map(|r| {
            r.as_ref()
                .filter(|r| 2 * r.k() == n)
                .map(|r| r.polynomial().clone())
        })
        .collect::<Option<Vec<_>>>()
        .and_then(|polys| CaFamily::new(polys).ok());
    let (predicted, profile) = match family.map(|f| f.predicted_min_distance()) {
        Some(Ok((d, p))) => (Some(d), Some(p)),
        _ => (None, None),
    };
    let pairs: Vec<[usize; 3]> = code
        .pairwise_distances(Exec::default())
        .into_iter()
        .map(|(i, j, d)| [i, j, d])
        .collect();
    let equidistant = pairs.windows(2).all(|w| w[0][2] == w[1][2]);
    let rows: Vec<String> = pairs
        .iter()
        .map(|[i, j, d]| format!("{i},{j},{d}"))
        .collect();
    let out = AnalyzeOut {
        params,
        constant_dim: code.constant_dim(),
        rules: rules
            .iter()
            .map(|r| r.as_ref().map(|r| r.polynomial().into()))
            .collect(),
        gcd_profile: profile,
        predicted_min_distance: predicted,
        pairwise_distances: pairs,
        equidistant,
    };
    let mut report = Report::new(out).csv("i,j,distance", rows);
    report.field = Some(code.field().spec_string());
    Ok(report)
}

#[derive(Serialize)]
struct CountOut {
    k: u64,
    t: Option<u64>,
    irreducible_counts: Vec<IrreducibleCount>,
    max_coprime_family_size: u128,
    max_coprime_family_size_literal: u128,
    uniform_gcd_family_size: Option<u128>,
    uniform_gcd_family_size_literal: Option<u128>,
}

pub fn count(a: &CountArgs) -> Result<Report, CliError> {
    let field = parse_field_spec(&a.q)?;
    let counts = (1..=a.k)
        .map(|j| gauss_count(j, field.order()))
        .collect::<Result<Vec<_>, _>>()?;
    let (uniform, uniform_literal) = match a.t {
        Some(t) => (
            Some(uniform_gcd_family_size(a.k, t, &field)?),
            Some(uniform_gcd_family_size_literal(a.k, t, &field)?),
        ),
        None => (None, None),
    };
    let rows: Vec<String> = counts
        .iter()
        .map(|c| format!("{},{},{}", c.degree, c.count, c.count_excluding_x))
        .collect();
    let out = CountOut {
        k: a.k,
        t: a.t,
        irreducible_counts: counts,
        max_coprime_family_size: max_coprime_family_size(a.k, &field)?,
        max_coprime_family_size_literal: max_coprime_family_size_literal(a.k, &field)?,
        uniform_gcd_family_size: uniform,
        uniform_gcd_family_size_literal: uniform_literal,
    };
    Ok(Report::new(out).csv("degree,count,count_excluding_x", rows))
}

#[derive(Serialize)]
struct SearchOut {
    k: usize,
    t: usize,
    gcd: Option<PolyOut>,
    size: usize,
    family: Vec<PolyOut>,
    formula_size: Option<u128>,
}

pub fn search_max(a: &SearchMaxArgs) -> Result<Report, CliError> {
    let field = parse_field_spec(&a.q)?;
    let (found, t, g, formula) = match &a.gcd {
        Some(text) => {
            let g = parse_polynomial(&field, text)?;
            let found = search_max_uniform_gcd(a.k, &g, a.budget, Exec::default())?;
            let t = g.degree().expect("search accepted g");
            let formula = uniform_gcd_family_size(a.k as u64, t as u64, &field)?;
            (found, t, Some(g), Some(formula))
        }
        None => {
            let found = search_max_family(a.k, a.t, &field, a.budget, Exec::default())?;
            let formula = if a.t == 0 {
                Some(max_coprime_family_size(a.k as u64, &field)?)
            } else {
                None
            };
            (found, a.t, None, formula)
        }
    };
    let rows: Vec<String> = found
        .iter()
        .enumerate()
        .map(|(i, p)| {
            format!(
                "{i},{},{}",
                quote(&format_polynomial(p)),
                quote(&p.to_string())
            )
        })
        .collect();
    let out = SearchOut {
        k: a.k,
        t,
        gcd: g.as_ref().map(PolyOut::from),
        size: found.len(),
        family: found.iter().map(PolyOut::from).collect(),
        formula_size: formula,
    };
    Ok(Report::new(out).csv("index,coefficients,display", rows))
}

#[derive(Serialize)]
struct SimulateOut {
    stats: SimulationStats,
}

pub fn simulate(a: &SimulateArgs) -> Result<Report, CliError> {
    let code = read_code(&a.code)?;
    let cfg = ChannelConfig {
        erasures: a.erasures,
        error_dims: a.errors,
        seed: a.seed,
    };
    let stats = simulate_with(&code, &cfg, a.trials, Exec::default())?;
    let failures: std::collections::BTreeMap<usize, u64> = stats
        .failure_histogram
        .iter()
        .map(|b| (b.distance, b.count))
        .collect();
    let rows: Vec<String> = stats
        .distance_histogram
        .iter()
        .map(|b| {
            format!(
                "{},{},{}",
                b.distance,
                b.count,
                failures.get(&b.distance).copied().unwrap_or(0)
            )
        })
        .collect();
    let mut report = Report::new(SimulateOut { stats }).csv("distance,trials,failures", rows);
    report.field = Some(code.field().spec_string());
    if let Some(path) = &a.out {
        report.files.push((path.clone(), Value::Null));
    }
    Ok(report)
}
