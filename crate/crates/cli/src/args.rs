use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "walled-tangle", version, about = "Oriented tangles, the quantized walled Brauer algebra and mixed tensor space")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Seed for random-word suites; echoed in their reports.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

/// A word given inline (`--type` and `--word`) or as a document file.
#[derive(Debug, Clone, Args)]
pub struct WordInput {
    /// Boundary type, e.g. `"vv | vv"` (`v` = ↓, `^` = ↑); the bottom may be omitted.
    #[arg(long = "type")]
    pub ty: Option<String>,
    /// Slice tokens, e.g. `"X+(1) X-(2)"`.
    #[arg(long)]
    pub word: Option<String>,
    /// File with a `type:` header line followed by slice tokens.
    #[arg(long, conflicts_with_all = ["ty", "word"])]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a word in the connector basis.
    Normalize {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: WordInput,
    },
    /// Multiply two words, the upper one on top.
    Multiply {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        upper_type: Option<String>,
        #[arg(long)]
        upper: Option<String>,
        #[arg(long, conflicts_with_all = ["upper_type", "upper"])]
        upper_file: Option<PathBuf>,
        #[arg(long)]
        lower_type: Option<String>,
        #[arg(long)]
        lower: Option<String>,
        #[arg(long, conflicts_with_all = ["lower_type", "lower"])]
        lower_file: Option<PathBuf>,
    },
    /// Matrix of a word on mixed tensor space, or of a product of quantum
    /// group generators acting on the space named by `--type`.
    Matrix {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: WordInput,
        /// Generators such as `"E(1,2) K'(1)"`, multiplied left to right.
        #[arg(long, conflicts_with_all = ["word", "file"])]
        generators: Option<String>,
        /// Evaluate entries at this rational value of q.
        #[arg(long)]
        q0: Option<String>,
    },
    /// Multiplication table of the connector basis of a square type.
    StructureConstants {
        #[arg(long)]
        n: u32,
        #[arg(long = "type")]
        ty: String,
    },
    /// Carry a word on `↓^(r+s)` to the walled type `↓^r ↑^s`.
    HeckeToWalled {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Slice tokens on `↓^(r+s)`.
        #[arg(long)]
        word: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Classical flip of a permutation diagram across the wall.
    Flip {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Edges such as `"T1-B2, T2-B1"`.
        #[arg(long)]
        connector: String,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Suite {
    /// Skein expansion, Reidemeister II invariance and basis idempotence on random words.
    Skein {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
    /// Crossing matrices against the Hecke action and the Hecke relations.
    Hecke {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Defining relations of the walled Brauer presentation.
    Presentation {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
    },
    /// Functoriality of tangle matrices and agreement with normal forms.
    Linking {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
    /// Schur–Weyl duality checks at a rational specialization.
    Duality {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value = "5/3")]
        q0: String,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Every suite at its default parameters.
    All,
}
