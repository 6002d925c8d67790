use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mvgroups::algebra::{
    action_from_json, coset_group, group_from_json, is_prime_power, make_field,
};
use mvgroups::classify::{
    catalogue_csv, classify_order3, collisions, enumerate_families, FamilyDescriptor, Verdict,
    VerdictKind,
};
use mvgroups::mvg::{
    are_isomorphic, build_type1, build_type2, build_xk, from_json, to_json, verify_all,
    MultivaluedGroup,
};
use mvgroups::srg::{self, Graph, PolarSign, SrgParams};
use mvgroups::{Error, Limits};

/// Finite multivalued groups, strongly regular graphs and the order-3 coset
/// classification.
#[derive(Parser)]
#[command(name = "mvg", version)]
struct Cli {
    /// Machine-readable JSON reports instead of aligned tables.
    #[arg(long, global = true)]
    json: bool,

    /// Size cap applied to groups, actions and graphs.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of an mvg-v1 table (`-` reads stdin).
    Verify { file: PathBuf },
    /// Decide whether two mvg-v1 tables are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Build a multivalued group or graph and write it in its file format.
    Build {
        #[command(subcommand)]
        what: Build,
        /// Output file; `-` is stdout.
        #[arg(short, long, global = true, default_value = "-")]
        output: PathBuf,
    },
    /// Decide whether an order-3 group is a coset group.
    Classify(ClassifyArgs),
    /// List the attainable parameter families up to a vertex bound.
    Enumerate {
        #[arg(long, value_name = "N")]
        vmax: u64,
        /// Report parameter sets reached by more than one family.
        #[arg(long)]
        collisions: bool,
        /// Write the catalogue as CSV.
        #[arg(long, conflicts_with = "collisions")]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum Build {
    /// Coset group of a grp-v1 group under an act-v1 action.
    Coset {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// X(k), the (2k+1)-valued swap-star group.
    Xk { k: u64 },
    /// Symmetric-star group X_n(m1, m2, a).
    Type1 { n: u64, m1: u64, m2: u64, a: u64 },
    /// Swap-star group X_n(a).
    Type2 { n: u64, a: u64 },
    /// The group of a strongly regular parameter set.
    Srg {
        v: u64,
        k: u64,
        lambda: u64,
        mu: u64,
    },
    /// A family graph.
    Graph {
        #[command(subcommand)]
        family: GraphFamily,
        /// Write a plain edge list instead of graph-v1 JSON.
        #[arg(long, global = true)]
        edge_list: bool,
    },
}

#[derive(Subcommand)]
enum GraphFamily {
    /// Paley graph on GF(q), q = 1 mod 4.
    Paley { q: u64 },
    /// Paley tournament on GF(q), q = 3 mod 4.
    Tournament { q: u64 },
    /// p^s disjoint cliques of size p^t.
    Cliques { p: u64, t: u32, s: u32 },
    /// q x q rook's graph.
    Grid { q: u64 },
    /// Van Lint-Schrijver cyclotomic graph on GF(p^((c-1)t)).
    Vls { p: u64, c: u64, t: u32 },
    /// Affine polar graph of a quadratic form on GF(q)^(2e).
    Polar {
        q: u64,
        e: u32,
        #[arg(allow_hyphen_values = true)]
        sign: PolarSign,
    },
    /// Complement of the hyperbolic affine polar graph over GF(2).
    PolarPlusComp { e: u32 },
    /// Bilinear forms graph on 2 x e matrices over GF(q).
    Bilinear { q: u64, e: u32 },
    /// Alternating forms graph on 5 x 5 matrices over GF(q).
    Alternating { q: u64 },
    /// Complement of a graph-v1 file or edge list.
    Complement { file: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ClassifyArgs {
    #[arg(long, num_args = 4, value_names = ["N", "M1", "M2", "A"])]
    sym: Option<Vec<u64>>,
    #[arg(long, num_args = 2, value_names = ["N", "A"])]
    swap: Option<Vec<u64>>,
    #[arg(long)]
    file: Option<PathBuf>,
}

/// Success or a well-formed negative answer.
enum Answer {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = cli.cap.map_or_else(Limits::default, Limits::uniform);
    match run(&cli, &limits) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("mvg: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotAMultivaluedGroup { .. } => 1,
        Error::ResourceLimit { .. } => 4,
        _ => 3,
    }
}

fn run(cli: &Cli, limits: &Limits) -> Result<Answer, Error> {
    match &cli.command {
        Command::Verify { file } => verify(&read(file)?, cli.json),
        Command::Iso { first, second } => {
            let (g, h) = (from_json(&read(first)?)?, from_json(&read(second)?)?);
            let map = are_isomorphic(&g, &h);
            if cli.json {
                print_json(&serde_json::json!({ "isomorphic": map.is_some(), "map": map }))?;
            } else {
                match &map {
                    Some(f) => {
                        let rows = g
                            .elements()
                            .map(|x| {
                                vec![g.name(x).to_string(), "->".into(), h.name(f[x]).to_string()]
                            })
                            .collect();
                        emit(&format!("isomorphic\n{}", align(rows)))?;
                    }
                    None => emit("not isomorphic\n")?,
                }
            }
            Ok(if map.is_some() {
                Answer::Yes
            } else {
                Answer::No
            })
        }
        Command::Build { what, output } => {
            let text = build(what, limits)?;
            write_out(output, &text)?;
            Ok(Answer::Yes)
        }
        Command::Classify(args) => {
            let g = classify_input(args)?;
            let verdict = classify_order3(&g)?;
            if cli.json {
                print_json(&verdict)?;
            } else {
                emit(&verdict_table(&verdict))?;
            }
            Ok(if verdict.coset {
                Answer::Yes
            } else {
                Answer::No
            })
        }
        Command::Enumerate {
            vmax,
            collisions: coll,
            csv,
        } => {
            let families = enumerate_families(*vmax);
            if *csv {
                emit(&catalogue_csv(&families)?)?;
            } else if *coll {
                let report = collisions(&families);
                if cli.json {
                    print_json(&report)?;
                } else {
                    let rows = report
                        .iter()
                        .map(|c| {
                            let who: Vec<_> = c
                                .members
                                .iter()
                                .map(|m| format!("{}({})", m.id, m.witness))
                                .collect();
                            vec![c.params.to_string(), who.join(" / ")]
                        })
                        .collect();
                    emit(&align(rows))?;
                }
            } else if cli.json {
                print_json(&families)?;
            } else {
                emit(&catalogue_table(&families))?;
            }
            Ok(Answer::Yes)
        }
    }
}

fn verify(text: &str, json: bool) -> Result<Answer, Error> {
    let g = from_json(text)?;
    let report = verify_all(&g);
    if json {
        print_json(&report)?;
    } else {
        let flag = |b: bool| if b { "ok" } else { "FAILS" }.to_string();
        let mut rows = vec![
            vec!["associativity".into(), flag(report.associative)],
            vec!["identity".into(), flag(report.has_identity)],
            vec!["inverse".into(), flag(report.has_inverses)],
            vec!["involution".into(), flag(report.involutive)],
            vec!["reciprocity".into(), flag(report.reciprocity_holds)],
        ];
        if let Some(c) = report.first_failure() {
            let names: Vec<_> = c.witness.iter().map(|&x| g.name(x)).collect();
            rows.push(vec![
                "first failure".into(),
                format!("{} at ({})", c.axiom, names.join(", ")),
            ]);
        }
        emit(&align(rows))?;
    }
    Ok(if report.is_ok() {
        Answer::Yes
    } else {
        Answer::No
    })
}

fn build(what: &Build, limits: &Limits) -> Result<String, Error> {
    let group = |g: MultivaluedGroup| Ok(to_json(&g) + "\n");
    match what {
        Build::Coset { group: gf, action } => {
            let g = group_from_json(&read(gf)?, limits)?;
            let a = action_from_json(&read(action)?, &g, limits)?;
            group(coset_group(&g, &a)?)
        }
        Build::Xk { k } => group(build_xk(*k)?),
        Build::Type1 { n, m1, m2, a } => group(build_type1(*n, *m1, *m2, *a)?),
        Build::Type2 { n, a } => group(build_type2(*n, *a)?),
        Build::Srg { v, k, lambda, mu } => group(srg::mvgroup_from_params(&SrgParams::new(
            *v, *k, *lambda, *mu,
        )?)?),
        Build::Graph { family, edge_list } => {
            let g = match family {
                GraphFamily::Tournament { q } => {
                    return Ok(srg::paley_tournament(&field(*q, limits)?)?.to_json() + "\n");
                }
                GraphFamily::Paley { q } => srg::paley_graph(&field(*q, limits)?)?,
                GraphFamily::Cliques { p, t, s } => srg::clique_union(*p, *t, *s, limits)?,
                GraphFamily::Grid { q } => srg::grid_graph(*q, limits)?,
                GraphFamily::Vls { p, c, t } => srg::vanlint_schrijver(*p, *c, *t, limits)?,
                GraphFamily::Polar { q, e, sign } => srg::affine_polar(*q, *e, *sign, limits)?,
                GraphFamily::PolarPlusComp { e } => srg::affine_polar_plus_complement(*e, limits)?,
                GraphFamily::Bilinear { q, e } => srg::bilinear_forms_graph(*q, *e, limits)?,
                GraphFamily::Alternating { q } => srg::alternating_forms_graph(*q, limits)?,
                GraphFamily::Complement { file } => srg::complement(&read_graph(&read(file)?)?),
            };
            Ok(if *edge_list {
                g.to_edge_list()
            } else {
                g.to_json() + "\n"
            })
        }
    }
}

fn field(q: u64, limits: &Limits) -> Result<mvgroups::algebra::FiniteField, Error> {
    match is_prime_power(q)? {
        Some((p, s)) => make_field(p, s, limits),
        None => Err(Error::InvalidInput(format!("{q} is not a prime power"))),
    }
}

fn read_graph(text: &str) -> Result<Graph, Error> {
    if text.trim_start().starts_with('{') {
        Graph::from_json(text)
    } else {
        Graph::from_edge_list(text)
    }
}

fn classify_input(args: &ClassifyArgs) -> Result<MultivaluedGroup, Error> {
    let as_input = |e: Error| match e {
        Error::NotAMultivaluedGroup { axiom, witness } => Error::InvalidInput(format!(
            "not a multivalued group: {axiom} fails at {witness:?}"
        )),
        other => other,
    };
    if let Some(v) = &args.sym {
        return build_type1(v[0], v[1], v[2], v[3]).map_err(as_input);
    }
    if let Some(v) = &args.swap {
        return build_type2(v[0], v[1]).map_err(as_input);
    }
    let file = args.file.as_ref().expect("clap requires one input");
    from_json(&read(file)?)
}

fn verdict_table(v: &Verdict) -> String {
    let kind = match &v.kind {
        VerdictKind::Xk { k } => format!("XK(k={k})"),
        VerdictKind::Srg(f) => format!("SRG {}({})", f.id, f.witness),
        VerdictKind::None(reason) => format!("NONE ({reason})"),
    };
    let mut rows = vec![
        vec!["coset".into(), if v.coset { "yes" } else { "no" }.into()],
        vec!["kind".into(), kind],
    ];
    if let Some(d) = v.derived {
        rows.push(vec!["derived".into(), d.to_string()]);
    }
    if v.matches.len() > 1 {
        let all: Vec<_> = v
            .matches
            .iter()
            .map(|f| format!("{}({})", f.id, f.witness))
            .collect();
        rows.push(vec!["matches".into(), all.join(", ")]);
    }
    align(rows)
}

fn catalogue_table(families: &[FamilyDescriptor]) -> String {
    let mut rows = vec![["v", "k", "lambda", "mu", "family", "witness"]
        .map(String::from)
        .to_vec()];
    for f in families {
        let (v, k, l, m) = f.params.tuple();
        rows.push(vec![
            v.to_string(),
            k.to_string(),
            l.to_string(),
            m.to_string(),
            f.id.to_string(),
            f.witness.to_string(),
        ]);
    }
    align(rows)
}

/// Left-aligned columns separated by two spaces.
fn align(rows: Vec<Vec<String>>) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c + 1 == row.len() {
                    s.clone()
                } else {
                    format!("{s:<w$}", w = widths[c])
                }
            })
            .collect();
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

fn read(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), Error> {
    if path.as_os_str() == "-" {
        emit(text)
    } else {
        fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }
}

fn emit(text: &str) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::InvalidInput(format!("stdout: {e}")))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Error> {
    emit(&(serde_json::to_string(value)? + "\n"))
}
