use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use serde::Deserialize;
use serde_json::{json, Value};

use gspn_core::eisen::{self, PrecisionSpec, UpperHalfPoint};
use gspn_core::embed;
use gspn_core::lfunc::{self, SatakeDatum, SatakeValue};
use gspn_core::liecomb::{self, WeightVec};
use gspn_core::reptheory::{self, IrrepDecomposition};
use gspn_core::wedgealg::{self, ProjectionData};
use gspn_core::WedgeTensorQ;

mod table;

/// Finite computations for special embeddings of GSp(2n): partitions, discrete
/// series, K-types, projection coefficients, Hodge numbers, Spin Euler factors
/// and the Kronecker limit formula.
#[derive(Parser, Debug)]
#[command(name = "gspn", version)]
struct Cli {
    /// Emit a single JSON document on stdout (the default is plain text).
    #[arg(long, global = true)]
    json: bool,

    /// JSON file with precision overrides {q_terms, lattice_bound, target_abs_error}.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Special partitions of n and their embedding invariants, or an exception scan.
    Partitions(PartitionsArgs),
    /// Harish-Chandra parameters, minimal K-types and Hodge types of a discrete-series packet.
    Dseries(DseriesArgs),
    /// K-type decomposition of ⋀^p p+ ⊗ ⋀^q p-.
    Ktypes(KtypesArgs),
    /// Projection of X_0 onto τ_(2,2,-4) and τ_(4,-2,-2) (n = 3).
    Project(ProjectArgs),
    /// Hodge numbers and archimedean pole orders.
    Hodge(HodgeArgs),
    /// Truncated partial Spin L-function from Satake data.
    Lfactor(LfactorArgs),
    /// Kronecker limit formula and logarithmic-derivative checks at one point.
    Klf(KlfArgs),
}

#[derive(Args, Debug)]
struct PartitionsArgs {
    /// Rank n (at least 2).
    #[arg(long, required_unless_present = "scan_max")]
    n: Option<u64>,
    /// List every n in [2, scan_max] without a special partition.
    #[arg(long)]
    scan_max: Option<u64>,
}

#[derive(Args, Debug)]
struct DseriesArgs {
    #[arg(long)]
    n: usize,
    /// Dominant weight λ, comma separated (defaults to 0).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    lambda: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
struct KtypesArgs {
    #[arg(long)]
    n: usize,
    /// Bidegree p,q.
    #[arg(long, value_delimiter = ',', num_args = 1, required_unless_present = "table")]
    wedge: Option<Vec<usize>>,
    /// Print every bidegree with p + q = n(n+1)/2.
    #[arg(long, conflicts_with = "wedge")]
    table: bool,
}

#[derive(Args, Debug)]
struct ProjectArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
}

#[derive(Args, Debug)]
struct HodgeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    lambda: Option<Vec<i64>>,
    /// (h^{w/2,+}, h^{w/2,-}) when w is even.
    #[arg(long, value_delimiter = ',')]
    diag_split: Option<Vec<u64>>,
    /// Only report the pole order at this m.
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
}

#[derive(Args, Debug)]
struct LfactorArgs {
    /// JSON array of {ell, c0, c1, c2, c3}; values are numbers, [re, im] pairs or "ram".
    #[arg(long)]
    satake: PathBuf,
    /// Complex point such as "2+0i".
    #[arg(long, default_value = "2+0i", allow_hyphen_values = true)]
    s: String,
    /// Largest prime used (defaults to the largest prime in the file).
    #[arg(long)]
    p_max: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PrecPreset {
    Default,
    Fast,
    High,
}

#[derive(Args, Debug)]
struct KlfArgs {
    /// Level N (at least 4).
    #[arg(long = "N")]
    level: u64,
    /// Point of the upper half plane, e.g. "0.1+0.8i".
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, value_enum, default_value_t = PrecPreset::Default)]
    prec: PrecPreset,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct PrecisionOverrides {
    q_terms: Option<usize>,
    lattice_bound: Option<u32>,
    target_abs_error: Option<f64>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(Value, String), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, text)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Partitions(a) => partitions(a),
        Command::Dseries(a) => dseries(a),
        Command::Ktypes(a) => ktypes(a),
        Command::Project(a) => project(a),
        Command::Hodge(a) => hodge(a),
        Command::Lfactor(a) => lfactor(a),
        Command::Klf(a) => klf(a, cli.config.as_ref()),
    }
}

fn lambda_or_zero(n: usize, lambda: &Option<Vec<i64>>) -> WeightVec {
    WeightVec(lambda.clone().unwrap_or_else(|| vec![0; n]))
}

fn partitions(a: &PartitionsArgs) -> Outcome {
    if let Some(max) = a.scan_max {
        if max < 2 {
            return Err(Failure::Usage("--scan-max must be at least 2".into()));
        }
        let ex = embed::scan_exceptions(max)?;
        let text = format!(
            "exceptions up to {max}: {}\n",
            ex.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        );
        return Ok((json!({"scan_max": max, "exceptions": ex}), text));
    }
    let n = a.n.expect("clap enforces --n or --scan-max");
    let parts = embed::find_special_partitions(n)?;
    let eps = embed::epsilon(n);
    let list: Vec<&[u64]> = parts.iter().map(|p| p.parts()).collect();
    let mut text = format!("n = {n}, epsilon = {eps}, {} partition(s)\n", parts.len());
    let mut value = json!({"n": n, "epsilon": eps, "partitions": list});
    match embed::canonical_partition(n)? {
        Some(p) => {
            let d = embed::embedding_datum(&p)?;
            let groups: Vec<[u64; 2]> = d.groups.iter().map(|b| [b.m, b.delta]).collect();
            text.push_str(&format!("canonical {:?}\n", p.parts()));
            text.push_str(&format!("groups (m, delta) {groups:?}\n"));
            text.push_str(&format!(
                "d = {}, dim_h = {}, c = {}, t = {}, hv_exponent = {}\n",
                d.d, d.dim_h, d.c, d.t, d.hv_exponent
            ));
            let obj = value.as_object_mut().expect("object");
            obj.insert("canonical".into(), json!(p.parts()));
            obj.insert("groups".into(), json!(groups));
            obj.insert("d".into(), json!(d.d));
            obj.insert("dim_h".into(), json!(d.dim_h));
            obj.insert("c".into(), json!(d.c));
            obj.insert("t".into(), json!(d.t));
            obj.insert("hv_exponent".into(), json!(d.hv_exponent));
        }
        None => {
            let obj = value.as_object_mut().expect("object");
            for key in ["canonical", "groups", "d", "dim_h", "c", "t", "hv_exponent"] {
                obj.insert(key.into(), Value::Null);
            }
        }
    }
    Ok((value, text))
}

fn dseries(a: &DseriesArgs) -> Outcome {
    let lambda = lambda_or_zero(a.n, &a.lambda);
    let packet = liecomb::discrete_series_packet(a.n, &lambda)?;
    let mut text = String::new();
    let records: Vec<Value> = packet
        .iter()
        .enumerate()
        .map(|(i, d)| {
            text.push_str(&format!(
                "w{}: hc = {}, min K-type = τ{}, hodge = ({}, {})\n",
                i + 1,
                d.hc_param,
                d.min_k_type,
                d.hodge.0,
                d.hodge.1
            ));
            json!({
                "rep_signs": d.rep.signs,
                "rep_perm": d.rep.perm,
                "hc_param": d.hc_param.0,
                "min_k_type": d.min_k_type.0,
                "hodge": [d.hodge.0, d.hodge.1],
            })
        })
        .collect();
    Ok((Value::Array(records), text))
}

fn decomposition_json(d: &IrrepDecomposition) -> Value {
    Value::Array(
        d.sorted_desc()
            .into_iter()
            .map(|(w, m)| json!([w.coords(), m]))
            .collect(),
    )
}

fn ktypes(a: &KtypesArgs) -> Outcome {
    if a.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if a.table {
        let rows = table::ktypes_rows(a.n)?;
        let text = table::render(&rows);
        let value = Value::Array(
            rows.iter()
                .map(|r| json!({"p": r.p, "q": r.q, "decomposition": decomposition_json(&r.decomposition)}))
                .collect(),
        );
        return Ok((value, text));
    }
    let wedge = a.wedge.as_ref().expect("clap enforces --wedge or --table");
    let [p, q] = wedge.as_slice() else {
        return Err(Failure::Usage("--wedge takes exactly two values p,q".into()));
    };
    let d = reptheory::wedge_pq(a.n, *p, *q)?;
    let text = format!("{}\n", table::render_row(&table::Row {
        p: *p,
        q: *q,
        decomposition: d.clone(),
    }));
    Ok((decomposition_json(&d), text))
}

fn projection_json(d: &ProjectionData) -> Value {
    json!({
        "target": d.target.0,
        "raising": d.raising.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "lowering": d.lowering.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "scalar_A": d.numerator.to_string(),
        "scalar_B": d.denominator.to_string(),
        "alpha": d.alpha.to_string(),
    })
}

fn project(a: &ProjectArgs) -> Outcome {
    let x0: WedgeTensorQ = wedgealg::x0(a.n)?;
    let main = wedgealg::projection_2_2_m4()?;
    let mirror = wedgealg::projection_4_m2_m2()?;
    let hw_a = wedgealg::is_highest_weight(&wedgealg::x_2_2_m4::<num_rational::BigRational>())?;
    let hw_b = wedgealg::is_highest_weight(&wedgealg::x_4_m2_m2::<num_rational::BigRational>())?;
    let hw_0 = wedgealg::is_highest_weight(&x0)?;
    let mut value = projection_json(&main);
    let obj = value.as_object_mut().expect("object");
    obj.insert(
        "highest_weight_checks".into(),
        json!({"X_(2,2,-4)": hw_a, "X_(4,-2,-2)": hw_b, "X_0": hw_0}),
    );
    obj.insert("mirror".into(), projection_json(&mirror));
    let text = format!(
        "R(X_0) = {} X_(2,2,-4)\nR(A(X_(2,2,-4))) = {} X_(2,2,-4)\nalpha = {}\n\
         mirror: {} / {} = {}\nhighest weight: X_(2,2,-4) {hw_a}, X_(4,-2,-2) {hw_b}, X_0 {hw_0}\n",
        main.numerator, main.denominator, main.alpha, mirror.numerator, mirror.denominator, mirror.alpha
    );
    Ok((value, text))
}

fn hodge(a: &HodgeArgs) -> Outcome {
    let lambda = lambda_or_zero(a.n, &a.lambda);
    let mut t = lfunc::hodge_weights(a.n, &lambda)?;
    if let Some(split) = &a.diag_split {
        let [plus, minus] = split.as_slice() else {
            return Err(Failure::Usage("--diag-split takes exactly two values".into()));
        };
        t.set_diag_split(*plus, *minus)?;
    }
    let w = t.weight();
    let entries: Vec<[i64; 3]> = t.entries().iter().map(|(&(p, q), &h)| [p, q, h as i64]).collect();
    let mut text = format!("w = {w}\np multiset {:?}\n", t.p_multiset());
    for [p, q, h] in &entries {
        text.push_str(&format!("h^({p},{q}) = {h}\n"));
    }
    let needs_split = w % 2 == 0 && t.diag_split().is_none();
    let mut value = json!({
        "n": a.n,
        "lambda": lambda.0,
        "w": w,
        "p_multiset": t.p_multiset(),
        "hodge": entries,
        "diag_split": t.diag_split().map(|(p, m)| [p, m]),
    });
    let obj = value.as_object_mut().expect("object");
    if needs_split {
        text.push_str("pole orders need --diag-split (w is even)\n");
        obj.insert("pole_orders".into(), Value::Null);
        obj.insert("orderpole".into(), Value::Null);
        return Ok((value, text));
    }
    let ms: Vec<i64> = match a.m {
        Some(m) => vec![m],
        None => {
            let lo = t.p_multiset().first().copied().unwrap_or(0);
            (lo..=w + 1).collect()
        }
    };
    let mut orders = Vec::new();
    for m in ms {
        let o = lfunc::gamma_pole_order(&t, m)?;
        text.push_str(&format!("ord_(s={m}) = {o}\n"));
        orders.push(json!([m, o]));
    }
    obj.insert("pole_orders".into(), Value::Array(orders));
    let special = if a.n >= 2 {
        match lfunc::orderpole_special(&t, a.n) {
            Ok(sp) => {
                text.push_str(&format!("special pole: m0 = {}, order = {} ({:?})\n", sp.m0, sp.order, sp.branch));
                json!({"m0": sp.m0, "order": sp.order, "branch": format!("{:?}", sp.branch)})
            }
            Err(e) => {
                text.push_str(&format!("special pole: {e}\n"));
                json!({"error": e.to_string()})
            }
        }
    } else {
        Value::Null
    };
    obj.insert("orderpole".into(), special);
    Ok((value, text))
}

/// Parse "a+bi", "a-bi", "a", "bi".
fn parse_complex(s: &str) -> Result<Complex<f64>, Failure> {
    let bad = || Failure::Usage(format!("cannot parse complex number {s:?}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(body) = t.strip_suffix('i') {
        // split at the last sign that is not part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        Ok(Complex::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
    } else {
        Ok(Complex::new(t.parse().map_err(|_| bad())?, 0.0))
    }
}

fn satake_value(v: &Value) -> Result<SatakeValue<f64>, Failure> {
    let bad = || Failure::Domain(format!("invalid Satake value {v}"));
    match v {
        Value::String(s) if s == "ram" => Ok(SatakeValue::Ramified),
        Value::String(s) => Ok(SatakeValue::Unramified(parse_complex(s).map_err(|_| bad())?)),
        Value::Number(x) => Ok(SatakeValue::Unramified(Complex::new(x.as_f64().ok_or_else(bad)?, 0.0))),
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(bad)?;
            let im = pair[1].as_f64().ok_or_else(bad)?;
            Ok(SatakeValue::Unramified(Complex::new(re, im)))
        }
        _ => Err(bad()),
    }
}

fn read_satake(path: &PathBuf) -> Result<Vec<SatakeDatum<f64>>, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&raw).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let items = doc
        .as_array()
        .ok_or_else(|| Failure::Domain("Satake file must hold a JSON array".into()))?;
    items
        .iter()
        .map(|item| {
            let ell = item
                .get("ell")
                .and_then(Value::as_u64)
                .ok_or_else(|| Failure::Domain(format!("missing integer ell in {item}")))?;
            let mut c = [SatakeValue::Ramified; 4];
            for (i, slot) in c.iter_mut().enumerate() {
                let key = format!("c{i}");
                let v = item
                    .get(&key)
                    .ok_or_else(|| Failure::Domain(format!("missing {key} for ell = {ell}")))?;
                *slot = satake_value(v)?;
            }
            Ok(SatakeDatum::new(ell, c)?)
        })
        .collect()
}

fn lfactor(a: &LfactorArgs) -> Outcome {
    let s = parse_complex(&a.s)?;
    let data = read_satake(&a.satake)?;
    let p_max = a
        .p_max
        .unwrap_or_else(|| data.iter().map(SatakeDatum::ell).max().unwrap_or(1));
    let r = lfunc::partial_l(&data, s, p_max)?;
    let text = format!(
        "L = {} {:+}i\ntail bound {:e}\nfactors used {}\n",
        r.value.re, r.value.im, r.tail_bound, r.factors_used
    );
    let value = json!({
        "value": [r.value.re, r.value.im],
        "tail_bound": r.tail_bound,
        "theta": r.theta,
        "factors_used": r.factors_used,
        "p_max": p_max,
    });
    Ok((value, text))
}

fn precision(preset: PrecPreset, config: Option<&PathBuf>) -> Result<PrecisionSpec, Failure> {
    let mut p = match preset {
        PrecPreset::Default => PrecisionSpec::default(),
        PrecPreset::Fast => PrecisionSpec {
            q_terms: 20,
            lattice_bound: 30,
            target_abs_error: 1e-6,
        },
        PrecPreset::High => PrecisionSpec {
            q_terms: 80,
            lattice_bound: 60,
            target_abs_error: 1e-12,
        },
    };
    if let Some(path) = config {
        let raw = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let o: PrecisionOverrides =
            serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        p.q_terms = o.q_terms.unwrap_or(p.q_terms);
        p.lattice_bound = o.lattice_bound.unwrap_or(p.lattice_bound);
        p.target_abs_error = o.target_abs_error.unwrap_or(p.target_abs_error);
    }
    if p.q_terms == 0 || p.lattice_bound == 0 || !(p.target_abs_error > 0.0) {
        return Err(Failure::Usage("precision settings must be positive".into()));
    }
    Ok(p)
}

fn klf(a: &KlfArgs, config: Option<&PathBuf>) -> Outcome {
    let prec = precision(a.prec, config)?;
    let z = parse_complex(&a.z)?;
    let z = UpperHalfPoint::new(z.re, z.im)?;
    let k = eisen::klf_compare(a.level, &z, &prec)?;
    let c = eisen::corodlog_check(a.level, &z, &prec)?;
    let value = json!({
        "N": a.level,
        "z": [z.x(), z.y()],
        "eis": k.eis.value,
        "ulog": k.ulog.value,
        "ulog_klf": k.ulog_klf.value,
        "residual": k.residual,
        "ratio_eis_to_ulog": k.ratio,
        "corodlog": {
            "dlog": c.dlog.value,
            "eis_prime": c.eis.value,
            "residual": c.residual,
        },
        "bounds": {
            "eis": k.eis.bound,
            "ulog": k.ulog.bound,
            "ulog_klf": k.ulog_klf.bound,
            "corodlog": c.dlog.bound + c.eis.bound,
        },
        "precision": {
            "q_terms": prec.q_terms,
            "lattice_bound": prec.lattice_bound,
            "target_abs_error": prec.target_abs_error,
        },
    });
    let text = format!(
        "E(g_z, Φ, 0)      = {:.15}\nlog|u| (φ(N) exp) = {:.15}\nlog|u'| (-1/φ(N)) = {:.15}\n\
         residual          = {:e}\nratio E / log|u|  = {:.15}\ncorodlog residual = {:e}\n",
        k.eis.value, k.ulog.value, k.ulog_klf.value, k.residual, k.ratio, c.residual
    );
    Ok((value, text))
}
