//! Command-line interface: cipher, ring-ideal inspection, algebra
//! validation/classification, constructors, enumeration, census, scan.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use blalg::cipher::{self, Alphabet, SecretKey};
use blalg::comet;
use blalg::construct::{self, RingDescriptor, DEFAULT_IDEAL_CAP};
use blalg::enumerate;
use blalg::poly::Poly;
use blalg::ring::QuotientRing;
use blalg::FiniteAlgebra;

#[derive(Parser)]
#[command(name = "blalg", version, about = "Finite BL/MV-algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Table,
    Json,
    Dot,
}

#[derive(Args)]
struct AlphabetOpt {
    /// File with one alphabet symbol per line (default: A..J)
    #[arg(long)]
    alphabet: Option<PathBuf>,
}

impl AlphabetOpt {
    fn load(&self) -> Result<Alphabet, blalg::Error> {
        match &self.alphabet {
            None => Ok(Alphabet::default_ten()),
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| blalg::Error::Parse(format!("{}: {e}", path.display())))?;
                Alphabet::from_lines(&text)
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a message
    Encrypt {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        beta: u32,
        #[arg(long)]
        text: String,
        /// Force the containing ideal (generator polynomial, e.g. "x^2+2x")
        #[arg(long)]
        ideal: Option<String>,
        /// Print the full step trace as JSON
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        alphabet: AlphabetOpt,
    },
    /// Decrypt a ciphertext into its candidate set
    Decrypt {
        /// Secret key as "p,beta,len"
        #[arg(long)]
        key: String,
        #[arg(long)]
        text: String,
        #[command(flatten)]
        alphabet: AlphabetOpt,
    },
    /// Print the ideal lattice of Z_p[x]/(f)
    RingIdeals {
        #[arg(long)]
        p: u64,
        /// Use the modulus x^(beta+1) - x
        #[arg(long)]
        beta: Option<u32>,
        /// Explicit monic modulus, e.g. "x^3-x"
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Validate, classify, split or compare serialized algebras
    Algebra {
        #[command(subcommand)]
        sub: AlgebraCmd,
    },
    /// Build an algebra and write it as JSON
    Build {
        #[command(subcommand)]
        sub: BuildCmd,
    },
    /// Write every BL-algebra of a given size as JSON, one file per class
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate MV/BL chain/comet counts for sizes 2..=max
    Census {
        #[arg(long, default_value = "6")]
        max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the ring-catalog property scan
    Scan {
        /// Descriptors such as "Zn(16)" or "Prod(Zn(2),Zn(4))"; default catalog if omitted
        #[arg(long)]
        ring: Vec<String>,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Validate tables and report axiom flags
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        /// "dot" renders the validated algebra's Hasse diagram instead
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the comet profile as JSON
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print every ordinal-sum decomposition with its reconstruction
    Split {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Search for an isomorphism between two algebras
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    /// The m-element MV-chain
    Mvchain {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ordinal sum of two serialized algebras
    Ordsum {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct product of two serialized algebras
    Product {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ideal lattice of a catalog ring descriptor
    Ring {
        #[arg(long)]
        descriptor: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn load_algebra(path: &PathBuf) -> Result<FiniteAlgebra, blalg::Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| blalg::Error::Parse(format!("{}: {e}", path.display())))?;
    FiniteAlgebra::from_json_str(&text)
}

fn emit(json: String, out: Option<PathBuf>) -> Result<(), blalg::Error> {
    match out {
        None => {
            println!("{json}");
            Ok(())
        }
        Some(path) => fs::write(&path, json + "\n")
            .map_err(|e| blalg::Error::Parse(format!("{}: {e}", path.display()))),
    }
}

fn run(command: Command) -> Result<(), blalg::Error> {
    match command {
        Command::Encrypt { p, beta, text, ideal, trace, alphabet } => {
            let alphabet = alphabet.load()?;
            let (ciphertext, key, tr) = match ideal {
                None => cipher::encrypt(&text, &alphabet, p, beta)?,
                Some(gen) => {
                    let gen = Poly::parse(p, &gen)?;
                    cipher::encrypt_forcing_ideal(&text, &alphabet, p, beta, &gen)?
                }
            };
            println!("ciphertext: {ciphertext}");
            println!("key: {},{},{}", key.p, key.beta, key.len);
            if trace {
                println!("{}", serde_json::to_string_pretty(&tr.to_json()).unwrap());
            }
            Ok(())
        }
        Command::Decrypt { key, text, alphabet } => {
            let alphabet = alphabet.load()?;
            let key = SecretKey::parse(&key)?;
            let candidates = cipher::decrypt(&text, &alphabet, &key)?;
            for c in candidates {
                println!("{c}");
            }
            Ok(())
        }
        Command::RingIdeals { p, beta, modulus, format } => {
            let ring = match (beta, modulus) {
                (Some(b), None) => QuotientRing::cyclic(p, b)?,
                (None, Some(m)) => QuotientRing::general(p, Poly::parse(p, &m)?)?,
                _ => {
                    return Err(blalg::Error::Parse(
                        "give exactly one of --beta or --modulus".into(),
                    ))
                }
            };
            print_ring_ideals(&ring, format)
        }
        Command::Algebra { sub } => match sub {
            AlgebraCmd::Check { input, format } => {
                let alg = load_algebra(&input)?;
                match format {
                    Format::Dot => print!("{}", alg.to_dot("algebra")),
                    _ => {
                        let report = alg.check_axioms();
                        println!("{}", serde_json::to_string_pretty(&report).unwrap());
                    }
                }
                Ok(())
            }
            AlgebraCmd::Classify { input } => {
                let alg = load_algebra(&input)?;
                let profile = comet::classify(&alg)?;
                println!("{}", serde_json::to_string_pretty(&profile).unwrap());
                Ok(())
            }
            AlgebraCmd::Split { input } => {
                let alg = load_algebra(&input)?;
                let splits = comet::ordinal_split(&alg)?;
                if splits.is_empty() {
                    println!("no ordinal-sum decomposition");
                }
                for s in splits {
                    println!(
                        "cut at {} ({}): lower n={}, upper n={}; ordinal_sum(lower, upper) rebuilds the input",
                        s.cut,
                        alg.name(s.cut),
                        s.lower.n(),
                        s.upper.n()
                    );
                    println!("lower: {}", s.lower.to_json_string());
                    println!("upper: {}", s.upper.to_json_string());
                }
                Ok(())
            }
            AlgebraCmd::Iso { a, b } => {
                let a = load_algebra(&a)?;
                let b = load_algebra(&b)?;
                match a.isomorphism(&b)? {
                    Some(map) => println!("isomorphic: {map:?}"),
                    None => println!("not isomorphic"),
                }
                Ok(())
            }
        },
        Command::Build { sub } => match sub {
            BuildCmd::Mvchain { m, out } => {
                if m < 2 {
                    return Err(blalg::Error::Parse("mvchain needs m >= 2".into()));
                }
                emit(construct::mv_chain(m).to_json_string(), out)
            }
            BuildCmd::Ordsum { a, b, out } => {
                let sum = construct::ordinal_sum(&load_algebra(&a)?, &load_algebra(&b)?)?;
                emit(sum.to_json_string(), out)
            }
            BuildCmd::Product { a, b, out } => {
                let prod = construct::direct_product(&load_algebra(&a)?, &load_algebra(&b)?)?;
                emit(prod.to_json_string(), out)
            }
            BuildCmd::Ring { descriptor, out } => {
                let desc = RingDescriptor::parse(&descriptor)?;
                let alg = construct::ring_ideal_lattice(&desc, DEFAULT_IDEAL_CAP)?;
                emit(alg.to_json_string(), out)
            }
        },
        Command::Enumerate { n, out } => {
            fs::create_dir_all(&out)
                .map_err(|e| blalg::Error::Parse(format!("{}: {e}", out.display())))?;
            let classes = enumerate::enumerate_bl(n)?;
            for (i, e) in classes.iter().enumerate() {
                let value = serde_json::json!({
                    "n": n,
                    "provenance": e.provenance,
                    "algebra": e.algebra.to_json(),
                });
                let path = out.join(format!("bl{n}_{:02}.json", i + 1));
                fs::write(&path, serde_json::to_string_pretty(&value).unwrap() + "\n")
                    .map_err(|e| blalg::Error::Parse(format!("{}: {e}", path.display())))?;
            }
            println!("wrote {} classes to {}", classes.len(), out.display());
            Ok(())
        }
        Command::Census { max, format } => {
            let report = enumerate::census(max)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                _ => print!("{}", report.to_table()),
            }
            Ok(())
        }
        Command::Scan { ring } => {
            let descriptors = if ring.is_empty() {
                enumerate::default_scan_catalog()
            } else {
                ring.iter()
                    .map(|r| RingDescriptor::parse(r))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let report = enumerate::ring_scan(&descriptors, DEFAULT_IDEAL_CAP)?;
            for e in &report.entries {
                println!(
                    "{}: ideals={} atoms={} coatoms={} bl={} mv={} ok",
                    e.descriptor, e.ideal_count, e.atoms, e.coatoms, e.is_bl, e.is_mv
                );
            }
            println!("{} rings scanned, zero violations", report.entries.len());
            Ok(())
        }
    }
}

fn print_ring_ideals(ring: &QuotientRing, format: Format) -> Result<(), blalg::Error> {
    let ideals = ring.ideals();
    let alg = ring.to_algebra()?;
    match format {
        Format::Dot => print!("{}", alg.to_dot("ideals")),
        Format::Table => return Err(blalg::Error::Parse("ring-ideals has no table format".into())),
        Format::Json => {
            let items: Vec<serde_json::Value> = ideals
                .iter()
                .map(|i| {
                    serde_json::json!({
                        "generator": i.generator().to_string(),
                        "exponents": i.exps(),
                        "annihilator": ring.annihilator(i).generator().to_string(),
                    })
                })
                .collect();
            let value = serde_json::json!({
                "p": ring.p(),
                "modulus": ring.modulus().to_string(),
                "factorization": ring.factorization().to_string(),
                "squarefree": ring.is_squarefree(),
                "ideals": items,
                "hasse": alg.hasse_edges(),
                "algebra": alg.to_json(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            println!(
                "R = Z_{}[x]/({}) = {}  [{}]",
                ring.p(),
                ring.modulus(),
                ring.factorization(),
                if ring.is_squarefree() { "squarefree" } else { "not squarefree" }
            );
            println!("{} ideals:", ideals.len());
            for (i, ideal) in ideals.iter().enumerate() {
                println!(
                    "  [{i}] ({})  Ann = ({})",
                    ideal.generator(),
                    ring.annihilator(ideal).generator()
                );
            }
            println!("Hasse edges (covers, bottom to top):");
            for (x, y) in alg.hasse_edges() {
                println!("  ({}) < ({})", ideals[x].generator(), ideals[y].generator());
            }
        }
    }
    Ok(())
}
