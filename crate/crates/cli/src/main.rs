use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qdomain_core::text::{
    element_json, parse_delement, parse_expression, parse_rational, parse_uq, render_coefficient,
    render_element, uq_json, Parsed,
};
use qdomain_core::{
    battery, check_positive_definite, Coefficient, Error, InvariantIntegral, PolAlgebra,
    RationalPoint, Report,
};
use serde_json::json;

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser, Debug)]
#[command(name = "qdomain", version, about = "Exact computations on the quantum matrix ball of type C_n")]
struct Cli {
    /// Rank n >= 2.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Specialize q to this rational in (0, 1), e.g. 1/2.
    #[arg(long, global = true)]
    q: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random batteries.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression.
    Nf { expr: String },
    /// Action of a U_q expression on a polynomial or an f0 sandwich.
    Act { xi: String, expr: String },
    /// Gram matrix of the Fock form in one degree.
    Gram {
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// With --q, print exact values as CSV instead.
        #[arg(long)]
        csv: bool,
    },
    /// Invariant integral of an element in f0.
    Integrate { expr: String },
    /// Run a verification suite; exits 1 when it finds failures.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Confluence,
    Hopf,
    ModuleAlgebra,
    Involution,
    Positivity,
    Invariance,
    Flatness,
}

fn point(q: &Option<String>) -> Result<Option<RationalPoint>, Error> {
    q.as_deref()
        .map(|s| RationalPoint::new(parse_rational(s)?, qdomain_core::coeff::PointVar::Q))
        .transpose()
}

fn value(c: &Coefficient, p: &Option<RationalPoint>) -> Result<Option<String>, Error> {
    p.as_ref().map(|p| c.evaluate(p).map(|v| v.to_string())).transpose()
}

fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let pol = PolAlgebra::new(cli.n)?;
    let p = point(&cli.q)?;
    let ii = InvariantIntegral::new(&pol);
    let out = match &cli.command {
        Command::Nf { expr } => match parse_expression(expr, &pol)? {
            Parsed::Element(e) if cli.json => json!({ "element": element_json(&e) }).to_string(),
            Parsed::Element(e) => render_element(&e),
            Parsed::DElement(x) if cli.json => json!({ "delement": x.to_json() }).to_string(),
            Parsed::DElement(x) => x.to_string(),
            Parsed::Uq(x) if cli.json => json!({ "uq": uq_json(&x) }).to_string(),
            Parsed::Uq(x) => x.to_string(),
        },
        Command::Act { xi, expr } => {
            let xi = parse_uq(xi, &pol)?;
            match parse_expression(expr, &pol)? {
                Parsed::Element(e) => {
                    let r = ii.hopf().act(&xi, &e)?;
                    if cli.json {
                        json!({ "element": element_json(&r) }).to_string()
                    } else {
                        render_element(&r)
                    }
                }
                Parsed::DElement(x) => {
                    let r = ii.act_on_d(&xi, &x)?;
                    if cli.json {
                        json!({ "delement": r.to_json() }).to_string()
                    } else {
                        r.to_string()
                    }
                }
                Parsed::Uq(_) => return Err(Error::Type("act needs a polynomial or an f0 sandwich".into())),
            }
        }
        Command::Gram { degree, csv } => {
            let g = ii.fock().gram(*degree);
            match (&p, csv) {
                (Some(p), true) => g.to_csv(p)?.trim_end().to_string(),
                (None, true) => return Err(Error::Type("--csv needs --q".into())),
                _ if cli.json => {
                    let mut v = g.to_json(p.as_ref())?;
                    if let Some(p) = &p {
                        v["positive_definite"] = json!(check_positive_definite(&g, p)?);
                    }
                    v.to_string()
                }
                _ => {
                    let mut s = g.render().trim_end().to_string();
                    if let Some(p) = &p {
                        s.push_str(&format!("\npositive definite at q={}: {}", p.value(), check_positive_definite(&g, p)?));
                    }
                    s
                }
            }
        }
        Command::Integrate { expr } => {
            let x = parse_delement(expr, &pol)?;
            let c = ii.integrate(&x);
            let v = value(&c, &p)?;
            if cli.json {
                json!({ "integral": render_coefficient(&c), "value": v }).to_string()
            } else {
                match v {
                    Some(v) => format!("{}\n{v}", render_coefficient(&c)),
                    None => render_coefficient(&c),
                }
            }
        }
        Command::Verify { suite, max_degree, max_len } => {
            let report = verify(&ii, *suite, *max_degree, *max_len, cli.seed, &p)?;
            let ok = report.passed();
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            return Ok((text, ok));
        }
    };
    Ok((out, true))
}

fn verify(
    ii: &InvariantIntegral<'_>,
    suite: Suite,
    max_degree: Option<usize>,
    max_len: usize,
    seed: u64,
    p: &Option<RationalPoint>,
) -> Result<Report, Error> {
    let pol = ii.pol();
    let points: Vec<RationalPoint> = match p {
        Some(p) => vec![p.clone()],
        None => vec![RationalPoint::q(1, 4)?, RationalPoint::q(1, 2)?, RationalPoint::q(3, 4)?],
    };
    Ok(match suite {
        Suite::Confluence => pol.verify_confluence(max_len).into(),
        Suite::Hopf => ii.hopf().verify_uqg_relations(max_degree.unwrap_or(3)),
        Suite::ModuleAlgebra => ii.hopf().verify_module_algebra(),
        Suite::Involution => {
            let battery = battery::random_elements(pol, seed, 50, max_degree.unwrap_or(2));
            let mut r = pol.verify_involution(&battery);
            r.merge(ii.hopf().verify_star_compatibility(&battery));
            r
        }
        Suite::Positivity => {
            let battery = ii.standard_battery(seed, 20);
            let mut r = Report::new("positivity");
            for p in &points {
                r.merge(ii.fock().verify_positivity(max_degree.unwrap_or(3), p)?);
                r.merge(ii.verify_positivity(&battery, p)?);
            }
            r
        }
        Suite::Invariance => ii.verify_invariance(&ii.standard_battery(seed, 20)),
        Suite::Flatness => pol.verify_flatness(max_degree.unwrap_or(5)),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
