//! The `pmx` command line tool: validation, products, composition,
//! quotients, derived graphs, the operator catalog, and DOT export over PMX
//! files.  All commands are deterministic; identical inputs give
//! byte-identical outputs.
//!
//! Exit codes: 0 on success, 1 on validation or data failures, 2 on usage
//! errors.

use clap::{Parser, Subcommand};
use pmx::pmxfile::{parse_pmx, write_pmx, PmxObject};
use pmx::premaniplex::{Premaniplex, RootedPremaniplex};
use pmx::voltage::{mix, FinVoltagePremaniplex, VoltageOperator};
use pmx::{catalog, dot, symmetry, Error};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pmx", version, about = "premaniplexes and voltage operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a PMX file and report the first violation, if any.
    Validate { file: PathBuf },
    /// Apply a voltage operator to a premaniplex.
    Apply {
        /// catalog operator name or operator PMX file
        #[arg(long)]
        op: String,
        /// input premaniplex file
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// keep only the component of this root, given as X_VERTEX,Y_VERTEX
        #[arg(long)]
        root: Option<String>,
        /// rank for parametric catalog operators (defaults to the input rank)
        #[arg(long)]
        rank: Option<usize>,
        /// extra integer parameters for catalog operators
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        param: Vec<i64>,
    },
    /// Compose two operators (first, then second).
    Compose {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        param: Vec<i64>,
    },
    /// Mix two premaniplexes of equal rank.
    Mix {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Count connected components.
    Components { file: PathBuf },
    /// Search for an isomorphism between two premaniplexes.
    Iso { a: PathBuf, b: PathBuf },
    /// Print the automorphism group order and vertex orbits.
    Aut { file: PathBuf },
    /// Print the symmetry type graph as a PMX document.
    Stg {
        file: PathBuf,
        /// JSON list of vertex permutations, inline or a file path
        #[arg(long)]
        gens: Option<String>,
    },
    /// Quotient by a group of automorphisms.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Derived graph of a finite voltage premaniplex.
    Derived {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Catalog access.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Render a PMX file as DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List catalog operator and sample names.
    List,
    /// Build a catalog object and write it as PMX.
    Get {
        name: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        param: Vec<i64>,
        /// input premaniplex for `mix` and `hat2`
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_class(&e))
        }
    }
}

/// 1 for data and validation failures, 2 for usage errors.
fn exit_class(e: &Error) -> u8 {
    match e {
        Error::UnknownName(_) | Error::BadParameter(_) | Error::BadSection { .. } => 2,
        _ => 1,
    }
}

fn read_object(path: &Path) -> Result<PmxObject, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadShape(format!("cannot read {}: {}", path.display(), e)))?;
    parse_pmx(&text)
}

fn read_premaniplex(path: &Path) -> Result<Premaniplex, Error> {
    match read_object(path)? {
        PmxObject::Premaniplex(x) => Ok(x),
        other => Err(Error::BadShape(format!(
            "{} holds a {:?}, expected a premaniplex",
            path.display(),
            other.kind()
        ))),
    }
}

fn read_voltage_premaniplex(path: &Path) -> Result<FinVoltagePremaniplex, Error> {
    match read_object(path)? {
        PmxObject::VoltagePremaniplex(vp) => Ok(vp),
        other => Err(Error::BadShape(format!(
            "{} holds a {:?}, expected a voltage premaniplex",
            path.display(),
            other.kind()
        ))),
    }
}

/// Catalog names win over file paths, as documented.
fn resolve_operator(
    spec: &str,
    rank: Option<usize>,
    params: &[i64],
    input: Option<&Premaniplex>,
) -> Result<VoltageOperator, Error> {
    if catalog::OPERATOR_NAMES.contains(&spec) {
        return catalog::operator_by_name(spec, rank, params, input);
    }
    match read_object(Path::new(spec))? {
        PmxObject::Operator(op) => Ok(op),
        other => Err(Error::BadShape(format!(
            "{} holds a {:?}, expected an operator",
            spec,
            other.kind()
        ))),
    }
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, content: &str) -> Result<(), Error> {
    let tmp = path.with_extension("tmp");
    let fail =
        |e: std::io::Error| Error::BadShape(format!("cannot write {}: {}", path.display(), e));
    std::fs::write(&tmp, content).map_err(fail)?;
    std::fs::rename(&tmp, path).map_err(fail)
}

fn parse_gens(spec: &str) -> Result<Vec<Vec<usize>>, Error> {
    let text = if spec.trim_start().starts_with('[') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| {
            Error::BadParameter(format!("cannot read generator file {}: {}", spec, e))
        })?
    };
    serde_json::from_str(&text).map_err(|e| {
        Error::BadParameter(format!(
            "generators must be a JSON list of permutations: {}",
            e
        ))
    })
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Validate { file } => {
            let object = read_object(&file)?;
            println!(
                "ok: {:?}, rank {}, {} vertices",
                object.kind(),
                object.graph().rank(),
                object.graph().vertex_count()
            );
            Ok(())
        }
        Command::Apply {
            op,
            input,
            out,
            root,
            rank,
            param,
        } => {
            let x = read_premaniplex(&input)?;
            let operator = resolve_operator(&op, rank.or(Some(x.rank())), &param, Some(&x))?;
            let result = match root {
                None => operator.apply(&x)?,
                Some(spec) => {
                    let (rx, ry) = parse_root(&spec)?;
                    let rooted = RootedPremaniplex { graph: x, root: rx };
                    operator.apply_rooted(&rooted, ry)?.graph
                }
            };
            write_atomic(&out, &write_pmx(&PmxObject::Premaniplex(result)))
        }
        Command::Compose {
            first,
            second,
            out,
            rank,
            param,
        } => {
            let f = resolve_operator(&first, rank, &param, None)?;
            let s = resolve_operator(&second, Some(f.out_rank()), &param, None)?;
            let composite = f.compose(&s)?;
            write_atomic(&out, &write_pmx(&PmxObject::Operator(composite)))
        }
        Command::Mix { a, b, out } => {
            let x = read_premaniplex(&a)?;
            let y = read_premaniplex(&b)?;
            write_atomic(&out, &write_pmx(&PmxObject::Premaniplex(mix(&x, &y)?)))
        }
        Command::Components { file } => {
            let x = read_premaniplex(&file)?;
            let components = x.components();
            let sizes: Vec<String> = components.iter().map(|c| c.len().to_string()).collect();
            println!("components: {}", components.len());
            println!("sizes: {}", sizes.join(" "));
            Ok(())
        }
        Command::Iso { a, b } => {
            let x = read_premaniplex(&a)?;
            let y = read_premaniplex(&b)?;
            match x.find_isomorphism(&y, None) {
                Some(image) => {
                    let parts: Vec<String> = image.iter().map(|v| v.to_string()).collect();
                    println!("isomorphic");
                    println!("image: {}", parts.join(" "));
                    Ok(())
                }
                None => Err(Error::BadShape("not isomorphic".into())),
            }
        }
        Command::Aut { file } => {
            let x = read_premaniplex(&file)?;
            let aut = symmetry::automorphisms(&x)?;
            println!("order: {}", aut.order());
            println!("orbits: {}", aut.orbit_count());
            let sizes: Vec<String> = aut.orbits().iter().map(|o| o.len().to_string()).collect();
            println!("orbit sizes: {}", sizes.join(" "));
            Ok(())
        }
        Command::Stg { file, gens } => {
            let x = read_premaniplex(&file)?;
            let stg = match gens {
                Some(spec) => symmetry::symmetry_type_graph(&x, Some(&parse_gens(&spec)?))?,
                None => symmetry::symmetry_type_graph(&x, None)?,
            };
            print!("{}", write_pmx(&PmxObject::Premaniplex(stg)));
            Ok(())
        }
        Command::Quotient { file, gens, out } => {
            let x = read_premaniplex(&file)?;
            let q = symmetry::quotient(&x, &parse_gens(&gens)?)?;
            write_atomic(&out, &write_pmx(&PmxObject::Premaniplex(q)))
        }
        Command::Derived { file, out } => {
            let vp = read_voltage_premaniplex(&file)?;
            let derived = vp.derived_graph()?;
            write_atomic(&out, &write_pmx(&PmxObject::Premaniplex(derived)))
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                println!("operators:");
                for name in catalog::OPERATOR_NAMES {
                    println!("  {}", name);
                }
                println!("samples:");
                for name in catalog::SAMPLE_NAMES {
                    println!("  {}", name);
                }
                Ok(())
            }
            CatalogCommand::Get {
                name,
                rank,
                param,
                input,
                out,
            } => {
                let object = if catalog::OPERATOR_NAMES.contains(&name.as_str()) {
                    let x = input.as_deref().map(read_premaniplex).transpose()?;
                    PmxObject::Operator(catalog::operator_by_name(&name, rank, &param, x.as_ref())?)
                } else {
                    let params: Vec<usize> = rank
                        .into_iter()
                        .map(Ok)
                        .chain(param.iter().map(|&p| {
                            usize::try_from(p).map_err(|_| {
                                Error::BadParameter(format!(
                                    "sample parameters must be non-negative, got {}",
                                    p
                                ))
                            })
                        }))
                        .collect::<Result<_, Error>>()?;
                    PmxObject::Premaniplex(catalog::sample(&name, &params)?)
                };
                write_atomic(&out, &write_pmx(&object))
            }
        },
        Command::ExportDot { file, out } => {
            let object = read_object(&file)?;
            write_atomic(&out, &dot::export_dot(&object))
        }
    }
}

fn parse_root(spec: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::BadParameter("root must be X_VERTEX,Y_VERTEX".into()));
    }
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::BadParameter(format!("bad root component: {}", s)))
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}
