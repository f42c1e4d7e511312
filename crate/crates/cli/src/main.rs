//! `widecat`: Groebner bases, syzygies, resolutions, supports and the
//! classification of wide subcategories from the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{IdealCmd, SpecOp};
use report::Report;

const GRAMMAR: &str = "\
Text formats:
  ring     ZZ | ZZ/n | QQ[x,y] | Fp(7)[x,y] | QQ[x,y]/(y^2) followed by an
           optional order, grevlex (default) or lex: \"QQ[x,y] lex\"
  elems    comma-separated: \"x^2 + 3/2*x*y - 1, x - y\"
  matrix   rows in brackets: \"[[x, y], [0, x^2]]\"
  module   summands joined by +: 0, R, R^3, R/(x, y), Z/4, coker [[x], [y]]
  wide     modules separated by ;  \"R/(x); R/(y)\"  or  \"wide[QQ[x,y]]{R/(x); R/(y)}\"
  complex  complex(LOW: r0, r1, ...){d1; d2; ...}  with d_k: F_k -> F_(k-1),
           LOW the lowest homological degree, 0 for a zero map
  groups   \"Z/2, Z/3 + Z/3\"   (oracle generators)
  specz    {2,3}  ~{5}  {2}+generic   (finite, cofinite, with the generic point)

Exit status: 0 success, 1 domain error (the error name is printed),
2 parse error (line and column are printed).";

#[derive(Parser)]
#[command(name = "widecat", version, about = "Commutative algebra and wide subcategory classification", after_long_help = GRAMMAR)]
struct Cli {
    /// Emit JSON (with a top-level "schema": 1) instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of the ideal generated by ELEMS.
    Gb {
        #[arg(long)]
        ring: String,
        elems: String,
    },
    /// Normal form of F modulo an ideal.
    Nf {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        f: String,
    },
    /// Ideal arithmetic: sum, product, intersection, quotient (colon),
    /// radical membership of an element, containment.
    Ideal {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum)]
        op: IdealCmd,
        a: String,
        b: String,
    },
    /// Generators of the kernel of a matrix, as columns.
    Syz {
        #[arg(long)]
        ring: String,
        matrix: String,
    },
    /// Free resolution; minimal and graded over polynomial rings.
    Resolve {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        module: String,
        /// Generator degrees, comma-separated (default all 0).
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Annihilator, Fitting ideal and support of a module.
    Supp {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        module: String,
    },
    /// Homology of a complex of free modules.
    Homology {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        complex: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
    },
    /// Koszul complex on ELEMS with its homology.
    Koszul {
        #[arg(long)]
        ring: String,
        elems: String,
    },
    /// Classifying support of the wide subcategory generated by modules.
    Classify {
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        wide: String,
    },
    /// Whether a module lies in a wide subcategory.
    Member {
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        module: String,
        #[arg(long)]
        wide: String,
    },
    /// The maps between wide and thick subcategories and their round trips.
    Fg {
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        wide: Option<String>,
        /// A generating complex; repeat for several.
        #[arg(long)]
        thick: Vec<String>,
    },
    /// Inflate a wide subcategory over RING/(IDEAL) to RING and restrict back.
    Uv {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        wide: String,
    },
    /// Extension-closure tower over finite abelian groups against the
    /// predicted classification.
    Oracle {
        /// Work with ZZ/n-modules (groups killed by n).
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 64)]
        bound: u64,
        /// Random maps to sample for kernel/cokernel checks on the closure.
        #[arg(long, default_value_t = 0)]
        snake: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Subsets of Spec ZZ and the coproduct-closed subcategories they classify.
    Specz {
        #[arg(value_enum)]
        op: SpecOp,
        a: String,
        /// Second set, a point (prime or "generic"), or a module such as "Z + Q + Z/8".
        b: Option<String>,
    },
}

fn run(cmd: Cmd) -> widecat::Result<Report> {
    match cmd {
        Cmd::Gb { ring, elems } => commands::gb(&ring, &elems),
        Cmd::Nf { ring, ideal, f } => commands::nf(&ring, &ideal, &f),
        Cmd::Ideal { ring, op, a, b } => commands::ideal(&ring, op, &a, &b),
        Cmd::Syz { ring, matrix } => commands::syz(&ring, &matrix),
        Cmd::Resolve {
            ring,
            module,
            degrees,
            cap,
        } => commands::resolve(&ring, &module, degrees.as_deref(), cap),
        Cmd::Supp { ring, module } => commands::supp(&ring, &module),
        Cmd::Homology {
            ring,
            complex,
            degree,
        } => commands::homology(&ring, &complex, degree),
        Cmd::Koszul { ring, elems } => commands::koszul(&ring, &elems),
        Cmd::Classify { ring, wide } => commands::classify(ring.as_deref(), &wide),
        Cmd::Member { ring, module, wide } => commands::member(ring.as_deref(), &module, &wide),
        Cmd::Fg { ring, wide, thick } => commands::fg(ring.as_deref(), wide.as_deref(), &thick),
        Cmd::Uv { ring, ideal, wide } => commands::uv(&ring, &ideal, &wide),
        Cmd::Oracle {
            modulus,
            gens,
            bound,
            snake,
            seed,
        } => commands::oracle(modulus, &gens, bound, snake, seed),
        Cmd::Specz { op, a, b } => commands::specz(op, &a, b.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.cmd) {
        Ok(rep) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(rep.render(json).as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            if json {
                let v = serde_json::json!({ "schema": 1, "error": e.name(), "message": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            }
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
