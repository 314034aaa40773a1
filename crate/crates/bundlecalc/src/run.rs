use std::fmt::Write as _;

use bundlecalc_core::bbw::CohomologyTable;
use bundlecalc_core::chow::{
    chern_character, discriminant, sym2_discriminant_coefficient, total_chern, wedge_discriminant_coefficient,
    BasisExpansion, ChowClass, SchubertRing, ZeroLocusChow,
};
use bundlecalc_core::{cohomology_table, euler_char_ambient, normalize, rank, BundleExpr, Grassmannian, Rational, Restriction};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cli::{ChernKind, Command, SetupArgs};
use crate::dsl::parse;
use crate::error::CliError;
use crate::setup::{resolve, Orientation, Setup};
use crate::SCHEMA_VERSION;

/// Rendered output of one command in both formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

fn big_uint(x: &BigUint) -> Value {
    x.to_u64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn big_int(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

/// Rationals are strings `p/q`, or `p` when integral.
pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

struct Context {
    g: Grassmannian,
    setup: Option<Setup>,
}

impl Context {
    fn from_args(args: &SetupArgs) -> Result<Self, CliError> {
        let ambient = match args.ambient.as_deref() {
            Some([k, n]) => Some((*k, *n)),
            Some(_) => return Err(CliError::Precondition("--ambient takes two values".into())),
            None => None,
        };
        let setup = resolve(ambient, args.conormal.as_deref(), args.section.as_deref(), args.setup_file.as_deref())?;
        let g = match (&setup, ambient) {
            (Some(s), _) => *s.grassmannian(),
            (None, Some((k, n))) => Grassmannian::new(k, n)?,
            (None, None) => {
                return Err(CliError::Precondition("an ambient Grassmannian is required (--ambient or --setup-file)".into()))
            }
        };
        Ok(Context { g, setup })
    }

    fn require_setup(&self, command: &str) -> Result<&Setup, CliError> {
        self.setup.as_ref().ok_or_else(|| {
            CliError::Precondition(format!("{command} needs a zero locus (--conormal, --section or --setup-file)"))
        })
    }

    fn header(&self, command: &str, target: Option<&BundleExpr>) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("command".into(), json!(command));
        let mut setup = json!({ "k": self.g.k(), "n": self.g.n() });
        if let Some(s) = &self.setup {
            setup["conormal"] = json!(s.locus.conormal().to_string());
            setup["orientation"] = json!(s.orientation.as_str());
            setup["codim"] = json!(s.locus.codim());
            setup["dim"] = json!(s.locus.dimension());
        }
        m.insert("setup".into(), setup);
        if let Some(t) = target {
            m.insert("target".into(), json!(t.to_string()));
        }
        m
    }

    fn setup_line(&self) -> String {
        match &self.setup {
            None => format!("ambient {}\n", self.g),
            Some(s) => {
                let how = match s.orientation {
                    Orientation::Conormal => "conormal bundle",
                    Orientation::Section => "conormal bundle (dual of the given section bundle)",
                };
                format!(
                    "X ⊂ {} of dimension {}, {how} {}\n",
                    self.g,
                    s.locus.dimension(),
                    s.locus.conormal()
                )
            }
        }
    }
}

fn finish(mut head: Map<String, Value>, result: Value, text: String) -> Report {
    head.insert("result".into(), result);
    Report { json: Value::Object(head), text }
}

fn table_json(table: &CohomologyTable) -> Value {
    let mut degrees = Map::new();
    for d in 0..=table.max_degree() {
        let summands: Vec<Value> = table
            .terms(d)
            .iter()
            .map(|t| json!({ "weight": t.weight.entries(), "mult": t.multiplicity, "dim": big_uint(&t.dimension) }))
            .collect();
        degrees.insert(d.to_string(), json!({ "total_dim": big_uint(&table.total_dim(d)), "summands": summands }));
    }
    Value::Object(degrees)
}

fn table_text(out: &mut String, space: &str, target: &BundleExpr, table: &CohomologyTable) {
    let _ = writeln!(out, "H^p({space}, {target}) =");
    for d in table.nonzero_degrees() {
        let parts: Vec<String> = table
            .terms(d)
            .iter()
            .map(|t| if t.multiplicity == 1 { format!("Σ{}", t.weight) } else { format!("{}·Σ{}", t.multiplicity, t.weight) })
            .collect();
        let _ = writeln!(out, "  {:>8}   p = {d}   {}", table.total_dim(d).to_string(), parts.join(" ⊕ "));
    }
    let _ = writeln!(out, "  {:>8}   otherwise", 0);
}

fn class_text(label: &str, class: &ChowClass, bases: &[(&str, BasisExpansion)]) -> String {
    let mut out = format!("{label} = {class}\n");
    for (name, b) in bases {
        let _ = writeln!(out, "  on X, {name}: {b}");
    }
    out
}

fn basis_json(b: &BasisExpansion) -> Value {
    Value::Array(
        b.terms
            .iter()
            .map(|t| json!({ "degree": t.degree, "label": t.label, "coefficient": rational(&t.coefficient) }))
            .collect(),
    )
}

fn class_json(class: &ChowClass) -> Value {
    let mut terms: Vec<(&bundlecalc_core::Partition, &Rational)> = class.terms().collect();
    terms.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then(b.0.cmp(a.0)));
    Value::Array(
        terms
            .into_iter()
            .map(|(l, c)| json!({ "schubert": l.parts(), "coefficient": rational(c) }))
            .collect(),
    )
}

fn with_bases(ctx: &Context, class: &ChowClass) -> Result<Vec<(&'static str, BasisExpansion)>, CliError> {
    match &ctx.setup {
        None => Ok(Vec::new()),
        Some(s) => {
            let z = ZeroLocusChow::new(s.locus.clone())?;
            Ok(vec![("h basis", z.to_h_basis(class)?), ("intrinsic basis", z.to_intrinsic_basis(class)?)])
        }
    }
}

fn class_report(ctx: &Context, command: &str, target: &BundleExpr, label: &str, class: ChowClass) -> Result<Report, CliError> {
    let bases = with_bases(ctx, &class)?;
    let mut result = json!({ "schubert": class_json(&class) });
    for (name, b) in &bases {
        let key = if *name == "h basis" { "h_basis" } else { "intrinsic_basis" };
        result[key] = basis_json(b);
    }
    let text = ctx.setup_line() + &class_text(label, &class, &bases);
    Ok(finish(ctx.header(command, Some(target)), result, text))
}

/// Executes one command.
pub fn run(command: &Command) -> Result<Report, CliError> {
    let name = command.name();
    match command {
        Command::LambdaCoefficient { rank, wedge, sym2 } => {
            let (value, what) = match (wedge, sym2) {
                (Some(p), false) => (wedge_discriminant_coefficient(*rank, *p)?, format!("wedge^{p}")),
                (None, true) => (sym2_discriminant_coefficient(*rank)?, "sym^2".to_string()),
                _ => return Err(CliError::Precondition("give exactly one of --wedge P and --sym2".into())),
            };
            let mut head = Map::new();
            head.insert("schema_version".into(), json!(SCHEMA_VERSION));
            head.insert("command".into(), json!(name));
            let result = json!({ "rank": rank, "functor": what, "lambda": rational(&value) });
            let text = format!("Δ({what} F) = {value} · Δ(F) for F of rank {rank}\n");
            Ok(finish(head, result, text))
        }
        Command::Decompose { setup, target } => {
            let ctx = Context::from_args(setup)?;
            let expr = parse(target)?;
            let summands = normalize(&expr, &ctx.g)?;
            let total = rank(&expr, &ctx.g);
            let mut text = ctx.setup_line();
            let _ = writeln!(text, "{expr} (rank {total}) =");
            let list: Vec<Value> = summands
                .iter()
                .map(|s| {
                    let _ = writeln!(text, "  {s}    α = {}, β = {}, rank {}", s.alpha, s.beta, s.rank());
                    json!({
                        "alpha": s.alpha.entries(),
                        "beta": s.beta.entries(),
                        "mult": s.multiplicity,
                        "rank": big_uint(&s.rank()),
                        "display": s.to_string(),
                    })
                })
                .collect();
            let result = json!({ "rank": big_uint(&total), "summands": list });
            Ok(finish(ctx.header(name, Some(&expr)), result, text))
        }
        Command::Cohomology { setup, target } => {
            let ctx = Context::from_args(setup)?;
            let expr = parse(target)?;
            let table = cohomology_table(&expr, &ctx.g)?;
            let mut text = format!("ambient {}\n", ctx.g);
            table_text(&mut text, &ctx.g.to_string(), &expr, &table);
            let _ = writeln!(text, "euler characteristic: {}", table.euler());
            let result = json!({ "degrees": table_json(&table), "euler": big_int(&table.euler()), "exactness": "exact" });
            Ok(finish(ctx.header(name, Some(&expr)), result, text))
        }
        Command::Restrict { setup, target, page } => {
            let ctx = Context::from_args(setup)?;
            let s = ctx.require_setup(name)?;
            let expr = parse(target)?;
            let restriction = s.locus.restrict_cohomology(&expr)?;
            let euler = s.locus.euler_characteristic(&expr)?;
            let table = restriction.table();
            let mut text = ctx.setup_line();
            table_text(&mut text, "X", &expr, table);
            let _ = writeln!(text, "euler characteristic: {euler}");
            let mut result = json!({ "degrees": table_json(table), "euler": big_int(&euler) });
            match &restriction {
                Restriction::Exact { support, .. } => {
                    result["exactness"] = json!("exact");
                    result["support"] = json!(support);
                    let _ = writeln!(text, "exact: no differential can act between nonzero Koszul cells");
                    let cells: Vec<String> = support.iter().map(|(q, p)| format!("({q},{p})")).collect();
                    let _ = writeln!(text, "nonzero cells (q,p): {}", cells.join(" "));
                }
                Restriction::Indeterminate { conflicts, .. } => {
                    result["exactness"] = json!("indeterminate");
                    result["conflicts"] = json!(conflicts);
                    let _ = writeln!(text, "indeterminate: dimensions above are upper bounds");
                    for (a, b) in conflicts {
                        let _ = writeln!(text, "  possible differential {a:?} -> {b:?}");
                    }
                }
            }
            if *page {
                let e1 = s.locus.e1_page(&expr)?;
                let mut cells = Vec::new();
                let _ = writeln!(text, "E1 page:");
                for (q, p) in e1.support() {
                    let dim = e1.cell_dim(q, p);
                    let _ = writeln!(text, "  (q,p) = ({q},{p})   dim {dim}");
                    cells.push(json!({ "q": q, "p": p, "dim": big_uint(&dim) }));
                }
                result["page"] = Value::Array(cells);
            }
            Ok(finish(ctx.header(name, Some(&expr)), result, text))
        }
        Command::Euler { setup, target, check_hrr } => {
            let ctx = Context::from_args(setup)?;
            let expr = parse(target)?;
            let mut text = ctx.setup_line();
            let result = match &ctx.setup {
                None => {
                    let chi = euler_char_ambient(&expr, &ctx.g)?;
                    let _ = writeln!(text, "χ({}, {expr}) = {chi}", ctx.g);
                    json!({ "euler": big_int(&chi) })
                }
                Some(s) => {
                    let chi = s.locus.euler_characteristic(&expr)?;
                    let _ = writeln!(text, "χ(X, {expr}) = {chi}");
                    let mut r = json!({ "euler": big_int(&chi) });
                    if *check_hrr {
                        let hrr = ZeroLocusChow::new(s.locus.clone())?.hrr_euler(&expr)?;
                        if hrr != chi {
                            return Err(CliError::Engine(bundlecalc_core::Error::Internal(format!(
                                "Koszul gives {chi} but Riemann-Roch gives {hrr}"
                            ))));
                        }
                        let _ = writeln!(text, "Riemann-Roch agrees: {hrr}");
                        r["hrr"] = big_int(&hrr);
                    }
                    r
                }
            };
            Ok(finish(ctx.header(name, Some(&expr)), result, text))
        }
        Command::Chern { setup, target, kind, truncation } => {
            let ctx = Context::from_args(setup)?;
            let expr = parse(target)?;
            let ring = SchubertRing::new(ctx.g);
            let trunc = truncation.unwrap_or(ctx.g.dimension() as u32);
            let (label, class) = match kind {
                ChernKind::Ch => ("ch", chern_character(&ring, &expr, trunc)?),
                ChernKind::C => ("c", total_chern(&ring, &expr, trunc)?),
            };
            class_report(&ctx, name, &expr, &format!("{label}({expr})"), class)
        }
        Command::Discriminant { setup, target } => {
            let ctx = Context::from_args(setup)?;
            let expr = parse(target)?;
            let ring = SchubertRing::new(ctx.g);
            let class = discriminant(&ring, &expr)?;
            class_report(&ctx, name, &expr, &format!("Δ({expr})"), class)
        }
        Command::Modularity { setup, target } => {
            let ctx = Context::from_args(setup)?;
            let s = ctx.require_setup(name)?;
            let expr = parse(target)?;
            let cert = ZeroLocusChow::new(s.locus.clone())?.modularity_check(&expr)?;
            let pairings: Vec<Value> = cert
                .pairings
                .iter()
                .map(|(w, d, c)| json!({ "schubert": w.parts(), "delta": rational(d), "c2": rational(c) }))
                .collect();
            let result = json!({
                "lambda": rational(&cert.lambda),
                "certified": cert.certified,
                "restriction_injectivity_assumed": cert.restriction_injectivity_assumed,
                "pairings": pairings,
            });
            let mut text = ctx.setup_line();
            let _ = writeln!(
                text,
                "Δ({expr}) {} {} · c2(X) on X",
                if cert.certified { "=" } else { "≠" },
                cert.lambda
            );
            let _ = writeln!(text, "certified: {} (assumes restriction is injective on these classes)", cert.certified);
            Ok(finish(ctx.header(name, Some(&expr)), result, text))
        }
    }
}
