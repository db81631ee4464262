//! Command-line front end: tables, folding, canonicalization, polytope
//! export and the oracle verification suite. All numeric output is exact
//! `p/q` text, never decimals.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use weylfold::oracle::checks::{run_all, Outcome};
use weylfold::rational::{format_rat, parse_rat};
use weylfold::rootsys::{build, RootSystem, RootSystemType};
use weylfold::weyl::AffineElement;
use weylfold::{
    canonicalize, coset_representatives, enumerate_lattices, fold_full, fundamental_polytope,
    omega_group, omega_subgroup, polytope_to_json, subgroup_closure, subgroup_to_lattice,
    CoweightVector, LatticeSpec,
};

#[derive(Parser)]
#[command(
    name = "weylfold",
    about = "Exact root data, affine Weyl groups and fundamental polytopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, fundamental group and Weyl order of a type
    Info {
        #[arg(long = "type")]
        ty: String,
    },
    /// Fold a point into the fundamental polytope of a lattice
    Fold {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "adjoint")]
        lattice: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Canonical torus representative of a point modulo the lattice
    Canon {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "adjoint")]
        lattice: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Vertices of the fundamental polytope of a lattice
    Vertices {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "adjoint")]
        lattice: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Alcove-stabilizer elements as extended-diagram node permutations
    Omega {
        #[arg(long = "type")]
        ty: String,
    },
    /// All intermediate lattices of the type
    Lattices {
        #[arg(long = "type")]
        ty: String,
    },
    /// JSON export of the fundamental polytope
    Export {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "adjoint")]
        lattice: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the brute-force verification suite for a type
    Verify {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn group_name(factors: &[u64]) -> String {
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.iter().map(|d| format!("Z/{d}Z")).collect::<Vec<_>>().join(" \u{2295} ")
    }
}

fn parse_type(s: &str) -> Result<RootSystem, String> {
    let ty = RootSystemType::parse(s).map_err(|e| e.to_string())?;
    build(ty).map_err(|e| e.to_string())
}

fn parse_lattice(rs: &RootSystem, s: &str) -> Result<LatticeSpec, String> {
    let group = omega_group(rs);
    let subgroup: Vec<usize> = match s {
        "adjoint" => {
            let mut all = vec![0usize];
            all.extend_from_slice(&rs.minuscule);
            all
        }
        "sc" => vec![0],
        other => {
            let rest = other
                .strip_prefix("H=")
                .ok_or_else(|| format!("unknown lattice spec '{other}', expected adjoint, sc or H=i,j,..."))?;
            let mut generators = Vec::new();
            if !rest.is_empty() {
                for part in rest.split(',') {
                    let i: usize = part
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad lattice generator '{part}'"))?;
                    if !rs.is_minuscule(i) {
                        return Err(format!("node {i} is not minuscule in {}", rs.ty));
                    }
                    generators.push(i);
                }
            }
            subgroup_closure(&group, &generators).map_err(|e| e.to_string())?
        }
    };
    subgroup_to_lattice(rs, &group, &subgroup).map_err(|e| e.to_string())
}

fn parse_point(rs: &RootSystem, s: &str) -> Result<CoweightVector, String> {
    let coords = s
        .split(',')
        .map(|part| parse_rat(part).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != rs.rank() {
        return Err(format!(
            "point has {} coordinates but {} has rank {}",
            coords.len(),
            rs.ty,
            rs.rank()
        ));
    }
    Ok(CoweightVector { coords })
}

fn coords_string(v: &CoweightVector) -> String {
    v.coords.iter().map(format_rat).collect::<Vec<_>>().join(",")
}

fn coords_json(v: &CoweightVector) -> serde_json::Value {
    serde_json::Value::Array(
        v.coords.iter().map(|c| serde_json::Value::String(format_rat(c))).collect(),
    )
}

fn witness_json(a: &AffineElement) -> serde_json::Value {
    serde_json::json!({
        "translation": coords_json(&a.translation),
        "word": a.word.letters,
    })
}

fn print_witness(a: &AffineElement) {
    println!("witness translation: {}", coords_string(&a.translation));
    println!("witness word: {}", a.word.display());
}

fn cmd_info(rs: &RootSystem) {
    println!("type: {}", rs.ty);
    println!("rank: {}", rs.rank());
    println!("positive roots: {}", rs.positive_roots.len());
    println!(
        "highest root: {}",
        rs.marks
            .iter()
            .enumerate()
            .filter(|(_, &n)| n != 0)
            .map(|(k, &n)| {
                if n == 1 {
                    format!("a{}", k + 1)
                } else {
                    format!("{}a{}", n, k + 1)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    );
    println!(
        "minuscule nodes: {}",
        if rs.minuscule.is_empty() {
            "none".to_string()
        } else {
            rs.minuscule.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
    );
    println!("fundamental group: {}", group_name(&rs.fundamental_group()));
    println!("Weyl order: {}", weylfold::oracle::classical_weyl_order(rs.ty));
    println!("Cartan matrix:");
    for row in &rs.cartan {
        println!(
            "  {}",
            row.iter().map(|v| format!("{v:>2}")).collect::<Vec<_>>().join(" ")
        );
    }
}

fn cmd_omega(rs: &RootSystem) {
    let group = omega_group(rs);
    println!("Omega = {}", group_name(&group.invariant_factors));
    for e in &group.elements {
        if e.is_identity() {
            continue;
        }
        println!("\u{3c3}_{} = {}", e.index, e.sigma.cycle_notation());
        println!(
            "\u{3c9}_{} = t_varpi{} . {}",
            e.index,
            e.index,
            e.affine.word.display()
        );
    }
    if group.order() == 1 {
        println!("(trivial stabilizer)");
    }
}

fn cmd_lattices(rs: &RootSystem) {
    for spec in enumerate_lattices(rs) {
        let (_, j_y) = omega_subgroup(rs, &spec);
        println!(
            "{}: index {} in coweights, J_Y = {{{}}}",
            spec.label(rs),
            spec.coweight_index(),
            j_y.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        );
        for row in &spec.basis {
            println!(
                "  basis {}",
                row.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            );
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Info { ty } => {
            cmd_info(&parse_type(&ty)?);
            Ok(0)
        }
        Command::Fold { ty, lattice, point, format } => {
            let rs = parse_type(&ty)?;
            let spec = parse_lattice(&rs, &lattice)?;
            let lambda = parse_point(&rs, &point)?;
            let (pt, witness) = fold_full(&rs, &spec, &lambda);
            if format == "json" {
                let doc = serde_json::json!({
                    "point": coords_json(&pt),
                    "witness": witness_json(&witness),
                });
                println!("{doc}");
            } else {
                println!("point: {}", coords_string(&pt));
                print_witness(&witness);
            }
            Ok(0)
        }
        Command::Canon { ty, lattice, point, format } => {
            let rs = parse_type(&ty)?;
            let spec = parse_lattice(&rs, &lattice)?;
            let lambda = parse_point(&rs, &point)?;
            let (canon, witness) = canonicalize(&rs, &spec, &lambda);
            if format == "json" {
                let doc = serde_json::json!({
                    "canonical": coords_json(&canon.rep),
                    "witness": witness_json(&witness),
                });
                println!("{doc}");
            } else {
                println!("canonical: {}", coords_string(&canon.rep));
                print_witness(&witness);
            }
            Ok(0)
        }
        Command::Vertices { ty, lattice, format } => {
            let rs = parse_type(&ty)?;
            let spec = parse_lattice(&rs, &lattice)?;
            let (_, j_y) = omega_subgroup(&rs, &spec);
            let polytope = fundamental_polytope(&rs, &j_y).map_err(|e| e.to_string())?;
            if format == "json" {
                println!("{}", polytope_to_json(&polytope, &rs.ty.to_string(), &spec.label(&rs)));
            } else {
                for v in &polytope.vertices {
                    println!("{}", coords_string(v));
                }
            }
            Ok(0)
        }
        Command::Omega { ty } => {
            cmd_omega(&parse_type(&ty)?);
            Ok(0)
        }
        Command::Lattices { ty } => {
            cmd_lattices(&parse_type(&ty)?);
            Ok(0)
        }
        Command::Export { ty, lattice, out } => {
            let rs = parse_type(&ty)?;
            let spec = parse_lattice(&rs, &lattice)?;
            let (_, j_y) = omega_subgroup(&rs, &spec);
            let polytope = fundamental_polytope(&rs, &j_y).map_err(|e| e.to_string())?;
            let doc = polytope_to_json(&polytope, &rs.ty.to_string(), &spec.label(&rs));
            let text = serde_json::to_string_pretty(&doc).expect("serializable");
            match out {
                Some(path) => std::fs::write(&path, text + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => println!("{text}"),
            }
            Ok(0)
        }
        Command::Verify { ty, seed } => {
            let rs = parse_type(&ty)?;
            let reports = run_all(&rs, seed);
            let mut failed = false;
            for r in &reports {
                let tag = match r.outcome {
                    Outcome::Pass => "PASS",
                    Outcome::Fail => {
                        failed = true;
                        "FAIL"
                    }
                    Outcome::Skipped => "SKIP",
                };
                println!("{tag} {}: {}", r.name, r.detail);
            }
            // also exercise the stabilizer coset machinery so a verify run
            // touches every module
            let group = omega_group(&rs);
            for spec in enumerate_lattices(&rs) {
                let reps = coset_representatives(&rs, &group, &spec);
                let expected = group.order() / spec.subgroup.len();
                if reps.len() != expected {
                    println!(
                        "FAIL coset-representatives: lattice {} has {} cosets, expected {}",
                        spec.label(&rs),
                        reps.len(),
                        expected
                    );
                    failed = true;
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
