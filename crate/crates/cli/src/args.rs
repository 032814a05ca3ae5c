use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hcobord", version, about = "Homology cobordism invariants of 3-manifolds and obstructions to Seifert fibered representatives")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "HCOBORD_FORMAT", default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Caps {
    /// Largest Milnor degree searched.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub cap: u32,
    /// Largest Magnus expansion degree.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub magnus_degree: u32,
    /// Largest torsion order for brute-force linking form comparisons.
    #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
    pub cutoff: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a Seifert fibered space given in `(±g | a1/b1, ...)` notation.
    Sfs {
        notation: String,
        /// Also compute the torsion linking form (rational homology spheres).
        #[arg(long)]
        linking_form: bool,
    },
    /// Linking matrix, Milnor invariants and Milnor degree of a link.
    Link {
        /// Catalog name: unlink, borromean, whitehead, L_d, cabled_borromean, borromean_framed.
        name: Option<String>,
        /// Catalog parameter such as `d=5`.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// JSON link file instead of a catalog name.
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
        /// Multi-index such as `123` or `1,1,2,2`.
        #[arg(long = "mu", value_name = "INDEX")]
        mu: Vec<String>,
        /// Compute the Milnor degree up to `--cap`.
        #[arg(long)]
        degree: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Runs the obstruction checks on one manifold.
    Obstruct {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        caps: Caps,
    },
    /// Builds members of the example families and compares them.
    Examples {
        /// prop4.1, prop4.2, prop4.3, prop4.4 or whitehead-example.
        name: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Debug, Args, Clone)]
#[group(required = true, multiple = false, id = "input")]
pub struct SourceChoice {
    /// Seifert notation.
    #[arg(long)]
    pub sfs: Option<String>,
    /// Catalog link to surger.
    #[arg(long)]
    pub surgery: Option<String>,
    /// Example family member.
    #[arg(long)]
    pub example: Option<String>,
    /// JSON file holding a surgery presentation or a descriptor.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct Source {
    #[command(flatten)]
    pub choice: SourceChoice,
    /// Catalog parameter for `--surgery`, such as `k=2`.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    /// Framings for `--surgery`: `0`, `p=N` (all equal to N) or a comma list.
    #[arg(long)]
    pub framing: Option<String>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Debug, Args, Clone, Default)]
pub struct FamilyArgs {
    /// Milnor degree(s) for prop4.1.
    #[arg(long, value_delimiter = ',')]
    pub d: Vec<usize>,
    /// Half the first Betti number parameter.
    #[arg(long)]
    pub m: Option<usize>,
    /// Cable parameter(s) for prop4.3.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<i64>,
    /// Odd framing(s) for prop4.4.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub p: Vec<i64>,
    /// Half the component count(s) for prop4.2.
    #[arg(long, value_delimiter = ',')]
    pub r: Vec<usize>,
    /// `trivial` or Seifert notation of a rational homology sphere carrying the torsion.
    #[arg(long, default_value = "trivial")]
    pub torsion: String,
}
