use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hwmlab", version, about = "Exact computations with highest-weight modules of sp(2n)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for parallel orbit enumeration.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Rank; checked against the weight when given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated entries, places separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
    /// Place index (0-based).
    #[arg(long, default_value_t = 0)]
    pub place: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dot orbit, ρ, flags and the anti-dominant representative of a weight.
    Orbit {
        #[command(flatten)]
        weight: WeightArgs,
        /// Signed permutation to apply: 1-based images, e.g. `2,1`.
        #[arg(long)]
        perm: Option<String>,
        /// Signs for `--perm`, e.g. `1,-1`.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
    /// Unitarity verdict and, for regular anti-dominant weights, the unitary orbit.
    Unitary {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// K-type combinatorics.
    Ktype {
        #[command(subcommand)]
        op: KtypeOp,
    },
    /// Enveloping algebra and central generators.
    Center {
        #[command(subcommand)]
        op: CenterOp,
    },
    /// Infinitesimal character of a weight.
    Infchar {
        #[command(flatten)]
        weight: WeightArgs,
        /// Second weight to compare against.
        #[arg(long, allow_hyphen_values = true)]
        compare: Option<String>,
    },
    /// Character sets, projectors and extension data.
    Project {
        #[command(subcommand)]
        op: ProjectOp,
    },
    /// Possible modules generated by a K-type.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        weight: String,
        /// `distinguished` or an explicit signature.
        #[arg(long)]
        ktype: Option<String>,
    },
    /// Nearly holomorphic q-expansions at level one.
    Sl2 {
        #[command(subcommand)]
        op: Sl2Op,
    },
}

#[derive(Subcommand, Debug)]
pub enum KtypeOp {
    /// Littlewood-Richardson decomposition of a tensor product.
    Lr {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// K-types of U(p+) up to a degree.
    Upplus {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Multiplicity of a K-type in a parabolic Verma module.
    Verma {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        ktype: String,
        /// Largest U(p+) degree to consider; defaults to the forced degree.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// j-invariant and the distinguished K-type.
    Distinguished {
        #[arg(long)]
        weight: String,
    },
    /// Iterates of the parity map.
    Gmap {
        #[arg(long)]
        weight: String,
        /// Number of iterations; defaults to n - 1.
        #[arg(long)]
        iterate: Option<usize>,
    },
    /// Multiplicity of the j-th exterior power in a principal series.
    Parity {
        /// Sign characters as 0/1 entries.
        #[arg(long)]
        eps: String,
        #[arg(long)]
        j: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CenterOp {
    /// The central generator D_{2r}.
    Generator {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Admissible words of length 2r with their L-numbers.
    Words {
        #[arg(long)]
        r: usize,
        /// Check adjacency without wrapping around.
        #[arg(long)]
        linear: bool,
    },
    /// L-number of a word such as `E-BE+B*`.
    Lnumber {
        #[arg(long)]
        word: String,
        #[arg(long)]
        linear: bool,
    },
    /// Scalar by which a central element acts on a highest-weight vector.
    Eigen {
        #[arg(long)]
        n: usize,
        /// Use D_{2r}.
        #[arg(long, conflicts_with = "element")]
        r: Option<usize>,
        /// A constant or a product such as `E+(1,1)*E-(1,1)`.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Bracket of two basis elements.
    Commutator {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// PBW normal form of a product of basis elements.
    Normal {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Whether an element is central.
    Central {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "element")]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProjectOp {
    /// Unitarizable weights whose Verma module contains the K-type.
    Xset {
        /// Signature per place, places separated by `;`.
        #[arg(long)]
        ktype: String,
    },
    /// Projector onto the character of `--target` among those of the K-type.
    Plan {
        #[arg(long)]
        ktype: String,
        #[arg(long)]
        target: String,
    },
    /// Applies a projector to the all-ones vector of a truncated model.
    Apply {
        #[arg(long)]
        ktype: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = hwmlab::projection::DEFAULT_TRUNCATION)]
        truncation: usize,
        /// Summand such as `N:4,3`, `L:4,1` or `NDual:4,1`; defaults to the Verma modules of the xset.
        #[arg(long)]
        module: Vec<String>,
    },
    /// Non-split extension between L(λ) and L(λ').
    Ext {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Leading entries of λ, possibly empty.
        #[arg(long, default_value = "")]
        head: String,
    },
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Series as JSON `{"precision":M,"terms":[{"m","r","re","im","pi_exp"}]}`; defaults to E2.
    #[arg(long)]
    pub series: Option<String>,
    /// Precision used for the default E2.
    #[arg(long, default_value_t = hwmlab::sl2lab::DEFAULT_PRECISION)]
    pub prec: u32,
}

#[derive(Subcommand, Debug)]
pub enum Sl2Op {
    /// q-expansion of E2.
    E2 {
        #[arg(long, default_value_t = hwmlab::sl2lab::DEFAULT_PRECISION)]
        prec: u32,
    },
    /// Lowering operator E.
    Lower {
        #[command(flatten)]
        input: SeriesArgs,
        /// Number of applications.
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Maass-Shimura raising operator.
    Raise {
        #[command(flatten)]
        input: SeriesArgs,
        /// Weight of the input.
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        k: i64,
    },
    /// Holomorphic part and nearly holomorphic degree.
    Holo {
        #[command(flatten)]
        input: SeriesArgs,
    },
    /// Dimensions of weight slices reachable by words in E and the raising operator.
    Probe {
        #[command(flatten)]
        input: SeriesArgs,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}
