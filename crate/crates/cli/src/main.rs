use std::process::ExitCode;

use affsym::verify::{self, Options};
use affsym::{Context, ExtendedAffineElement, Polynomial, QuantumClass, WeylElement};
use anyhow::{anyhow, bail, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "affsym", version, about = "Affine Weyl groups, nil-Hecke rings and affine Grassmannian homology")]
struct Cli {
    /// Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    cartan: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, roots, coroots and minuscule nodes.
    Rootinfo,
    /// A finite Weyl group element: reduced word, length, coset representative.
    Weyl {
        #[arg(long)]
        w: String,
        /// Comma separated nodes of I_P.
        #[arg(long)]
        parabolic: Option<String>,
    },
    /// An extended affine Weyl group element, or a listing of W̃⁻ up to a length.
    Affine {
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// The A-basis expansion of δ_w.
    Nilhecke {
        #[arg(long)]
        w: String,
    },
    /// The image j(ξ_w) in the extended nil-Hecke ring.
    Jmap {
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Largest ℓ(x) the general solver considers.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// The Pieri element j(ξ_{τ_i v_i τ_i⁻¹}) for a minuscule node.
    Pieri {
        #[arg(long)]
        node: usize,
    },
    /// The Pontryagin product ξ_a × ξ_b.
    HomologyProduct {
        /// The two factors; pass --w twice.
        #[arg(long, num_args = 1, required = true)]
        w: Vec<String>,
        #[arg(long)]
        equivariant: bool,
    },
    /// σ^P(v_i) × v_i^*σ^P(w) in the quantum cohomology of G/P.
    Quantum {
        #[arg(long)]
        node: usize,
        #[arg(long)]
        w: String,
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long)]
        equivariant: bool,
    },
    /// Replay the worked examples and identity suites.
    VerifyPaper {
        #[arg(long)]
        filter: Option<String>,
        /// Flip the sign convention of ξ^w(v); the Pieri checks must then fail.
        #[arg(long, hide = true)]
        mutate_xi_sign: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Auto,
    Translation,
    Solve,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn context(cli: &Cli) -> Result<Context> {
    let t = cli.cartan.as_deref().ok_or_else(|| anyhow!("--type is required"))?;
    Ok(Context::new(t)?)
}

fn parse_nodes(c: &Context, s: Option<&str>) -> Result<Vec<usize>> {
    let Some(s) = s else { return Ok(Vec::new()) };
    let mut nodes = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        nodes.push(part.parse::<usize>().with_context(|| format!("bad node '{part}'"))?);
    }
    nodes.sort_unstable();
    nodes.dedup();
    c.check_nodes(&nodes)?;
    Ok(nodes)
}

fn parse_weyl(c: &Context, s: &str) -> Result<WeylElement> {
    let x = c.parse_elem(s)?;
    if !x.t.is_zero() {
        bail!("'{s}' is not in the finite Weyl group");
    }
    Ok(x.u)
}

fn emit(cli: &Cli, text: &str, value: serde_json::Value) -> Result<ExitCode> {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("{text}");
    }
    Ok(ExitCode::SUCCESS)
}

fn elem_json(c: &Context, x: &ExtendedAffineElement) -> serde_json::Value {
    let (z, word) = c.reduced_word(x);
    json!({
        "elem": c.format_elem(x),
        "finite": c.w.format(x.u),
        "translation": x.t.coords(),
        "length": c.length(x),
        "z_component": z,
        "word": word,
        "grassmannian": c.is_in_waffm(x),
    })
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if let Command::VerifyPaper { filter, mutate_xi_sign } = &cli.cmd {
        return verify_paper(cli, filter.clone(), *mutate_xi_sign);
    }
    let c = context(cli)?;
    match &cli.cmd {
        Command::Rootinfo => {
            let rs = &c.rs;
            let roots: Vec<String> = rs.positive_roots().iter().map(|r| r.to_string()).collect();
            let coroots: Vec<String> = rs.positive_coroots().iter().map(|r| r.to_string()).collect();
            let mut text = String::new();
            text.push_str("cartan matrix:\n");
            for row in rs.cartan_matrix() {
                text.push_str(&format!("  {row:?}\n"));
            }
            text.push_str(&format!("positive roots: {}\n", roots.join(" ")));
            text.push_str(&format!("positive coroots: {}\n", coroots.join(" ")));
            text.push_str(&format!("highest root: {}\n", rs.highest_root()));
            text.push_str(&format!("minuscule nodes: {:?}\n", rs.minuscule_nodes()));
            text.push_str(&format!("|W| = {}", c.w.order()));
            emit(
                cli,
                &text,
                json!({
                    "cartan_matrix": rs.cartan_matrix(),
                    "positive_roots": roots,
                    "positive_coroots": coroots,
                    "highest_root": rs.highest_root().to_string(),
                    "minuscule_nodes": rs.minuscule_nodes(),
                    "weyl_order": c.w.order(),
                }),
            )
        }
        Command::Weyl { w, parabolic } => {
            let u = parse_weyl(&c, w)?;
            let nodes = parse_nodes(&c, parabolic.as_deref())?;
            let rep = c.w.min_coset_rep(u, &nodes);
            let text = format!(
                "w = {}\nlength = {}\ninverse = {}\nminimal coset representative = {}",
                c.w.format(u),
                c.w.length(u),
                c.w.format(c.w.inverse(u)),
                c.w.format(rep)
            );
            emit(
                cli,
                &text,
                json!({
                    "w": c.w.format(u),
                    "length": c.w.length(u),
                    "inverse": c.w.format(c.w.inverse(u)),
                    "parabolic": nodes,
                    "min_coset_rep": c.w.format(rep),
                }),
            )
        }
        Command::Affine { w, parabolic, max_length } => {
            let nodes = parse_nodes(&c, parabolic.as_deref())?;
            match (w, max_length) {
                (Some(w), _) => {
                    let x = c.parse_elem(w)?;
                    let mut v = elem_json(&c, &x);
                    let (z, word) = c.reduced_word(&x);
                    let mut text = format!(
                        "x = {}\nfinite part = {}, translation = {}\nlength = {}\nZ component = {z}, reduced word = {:?}\nGrassmannian = {}",
                        c.format_elem(&x),
                        c.w.format(x.u),
                        x.t,
                        c.length(&x),
                        word,
                        c.is_in_waffm(&x)
                    );
                    if !nodes.is_empty() {
                        let p = c.pi_p(&x, &nodes)?;
                        text.push_str(&format!("\npi_P = {}", c.format_elem(&p)));
                        v["pi_p"] = json!(c.format_elem(&p));
                    }
                    emit(cli, &text, v)
                }
                (None, Some(n)) => {
                    let elems = c.waffm_up_to_length(*n, None);
                    let names: Vec<String> = elems.iter().map(|x| c.format_elem(x)).collect();
                    let text = elems.iter().map(|x| format!("{}\t{}", c.length(x), c.format_elem(x))).collect::<Vec<_>>().join("\n");
                    emit(cli, &text, json!({ "grassmannian": names }))
                }
                (None, None) => bail!("pass --w or --max-length"),
            }
        }
        Command::Nilhecke { w } => {
            let x = c.parse_elem(w)?;
            let d = c.delta_to_a(&x);
            emit(cli, &format!("delta[{}] = {}", c.format_elem(&x), c.format_nh(&d)), serde_json::to_value(c.nh_json(&d))?)
        }
        Command::Jmap { w, method, max_length } => {
            let mut c = c;
            if let Some(n) = max_length {
                c.j_length_bound = *n;
            }
            let x = c.parse_elem(w)?;
            let j = match method {
                Method::Auto => c.j_basis(&x)?,
                Method::Translation => {
                    if x.u != c.w.identity() {
                        bail!("{} is not a translation", c.format_elem(&x));
                    }
                    c.j_ad_translation(&x.t)?
                }
                Method::Solve => c.solve_j_general(&x)?,
            };
            emit(cli, &format!("j(xi[{}]) = {}", c.format_elem(&x), c.format_nh(&j)), serde_json::to_value(c.nh_json(&j))?)
        }
        Command::Pieri { node } => {
            let j = c.j_pieri(*node)?;
            let tau = c.tau(*node)?.elem;
            let w = c.mul(&c.mul(&tau, &c.weyl(c.v_of_node(*node)?)), &c.inverse(&tau));
            emit(cli, &format!("j(xi[{}]) = {}", c.format_elem(&w), c.format_nh(&j)), serde_json::to_value(c.nh_json(&j))?)
        }
        Command::HomologyProduct { w, equivariant } => {
            let [a, b] = w.as_slice() else { bail!("pass exactly two --w factors") };
            let xa = c.parse_elem(a)?;
            let xb = c.parse_elem(b)?;
            let mut p = c.pontryagin_product(&c.xi(&xa)?, &c.xi(&xb)?)?;
            if !equivariant {
                p = p.specialize_zero();
            }
            let text = format!("xi[{}] * xi[{}] = {}", c.format_elem(&xa), c.format_elem(&xb), c.format_homology(&p));
            emit(cli, &text, serde_json::to_value(c.homology_json(&p))?)
        }
        Command::Quantum { node, w, parabolic, equivariant } => {
            let nodes = parse_nodes(&c, parabolic.as_deref())?;
            let w = parse_weyl(&c, w)?;
            if !c.w.is_min_coset_rep(w, &nodes) {
                bail!("{} is not a minimal coset representative", c.w.format(w));
            }
            let rhs = c.quantum_cominuscule_product(*node, w, &nodes)?;
            let vi = c.w.min_coset_rep(c.v_of_node(*node)?, &nodes);
            let lhs = if *equivariant {
                let star = c.weyl_star_action(c.v_of_node(*node)?, &QuantumClass::term(&nodes, vec![0; c.rank() - nodes.len()], w, Polynomial::one()));
                format!("S[{}] * ({})", c.w.format(vi), c.format_quantum(&star))
            } else {
                format!("S[{}] * S[{}]", c.w.format(vi), c.w.format(w))
            };
            let text = format!("{lhs} = {}", c.format_quantum(&rhs));
            emit(cli, &text, serde_json::to_value(c.quantum_json(&rhs))?)
        }
        Command::VerifyPaper { .. } => unreachable!(),
    }
}

fn verify_paper(cli: &Cli, filter: Option<String>, mutate_xi_sign: bool) -> Result<ExitCode> {
    let outcomes = verify::run(&Options { filter, mutate_xi_sign });
    if outcomes.is_empty() {
        bail!("no check matches the filter");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if cli.json {
        let v: Vec<_> = outcomes
            .iter()
            .map(|o| json!({ "group": o.group, "name": o.name, "passed": o.passed, "detail": o.detail, "seconds": o.elapsed.as_secs_f64() }))
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!({ "checks": v, "failed": failed }))?);
    } else {
        for o in &outcomes {
            println!(
                "{} [{}] {}: {} ({:.3}s)",
                if o.passed { "PASS" } else { "FAIL" },
                o.group,
                o.name,
                o.detail,
                o.elapsed.as_secs_f64()
            );
        }
        println!("{} of {} checks passed", outcomes.len() - failed, outcomes.len());
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

