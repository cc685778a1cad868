use clap::{Args, Parser, Subcommand, ValueEnum};

/// Logic workbench for positive superintuitionistic logics: provers,
/// finite algebras, varieties, and admissibility of rules.
///
/// Exit codes: 0 positive answer, 1 negative answer with witness,
/// 2 unknown or budget exhausted, 64 usage error, 65 data error.
#[derive(Parser, Debug)]
#[command(name = "brouwer", version, about, long_about = None)]
pub struct Cli {
    /// Print a JSON payload on stdout instead of the human-readable report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest algebra searched for countermodels and used as default family.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_size: usize,

    /// Largest substitution image, in binary connectives.
    #[arg(long, global = true, default_value_t = 7)]
    pub max_formula: usize,

    /// Cap on substitutions or axiom instances tried.
    #[arg(long, global = true, default_value_t = 500)]
    pub max_instances: usize,

    /// Number of fresh variables substitution images are built from.
    #[arg(long, global = true, default_value_t = 2)]
    pub pool_size: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide a formula in Int.
    Prove { formula: String },
    /// Decide a positive formula in Int⁺.
    ProvePos { formula: String },
    /// Bounded search in Int + positive axioms.
    ProveExt {
        formula: String,
        #[command(flatten)]
        axioms: AxiomArgs,
    },
    /// Bottom-elimination and Wajsberg reductions.
    Reduce {
        #[command(subcommand)]
        mode: ReduceMode,
    },
    /// Evaluate a formula under a valuation, e.g. --val p=m,q=0.
    Eval {
        algebra: String,
        formula: String,
        #[arg(long = "val", default_value = "")]
        valuation: String,
    },
    /// Check a formula under all valuations of an algebra.
    Valid { algebra: String, formula: String },
    /// Check a rule (inline `A, B / C` or a JSON rule file) in an algebra.
    CheckRule { algebra: String, rule: String },
    /// Brouwerian subalgebra generated by elements.
    Subreduct {
        algebra: String,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
    },
    /// Turn a Brouwerian algebra into a Heyting algebra.
    AdjoinZero {
        algebra: String,
        /// Add a new bottom instead of reusing the least element.
        #[arg(long)]
        force: bool,
    },
    /// Filter generated by elements.
    Filter {
        algebra: String,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
    },
    /// Quotient by the filter generated by elements.
    Quotient {
        algebra: String,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
    },
    /// Find a B-embedding of one algebra into another.
    Embed { source: String, target: String },
    /// List Heyting algebras up to --max-size elements.
    Enumerate,
    /// Variety membership of an algebra.
    Member { algebra: String, variety: String },
    /// Bounded search for a failure of B-saturation.
    SaturationCheck {
        variety: String,
        /// Algebras to search (names or files); defaults to all up to --max-size.
        #[arg(long, value_delimiter = ',')]
        catalog: Vec<String>,
        #[arg(long, default_value_t = 2)]
        max_gens: usize,
    },
    /// First unifier of a set of formulas.
    Unify {
        #[arg(required = true)]
        formulas: Vec<String>,
        #[command(flatten)]
        logic: LogicArgs,
    },
    /// Search for a substitution certifying that a rule is not admissible.
    Falsify {
        rule: String,
        #[command(flatten)]
        logic: LogicArgs,
    },
    /// Compare a substitution with its positive lift on a rule.
    Transfer {
        rule: String,
        substitution: String,
        #[command(flatten)]
        axioms: AxiomArgs,
    },
    /// Whether a rule follows from rules over a family of algebras.
    Follows {
        rule: String,
        #[arg(long = "from")]
        rules: Vec<String>,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Which rules follow from the others over a family of algebras.
    Independent {
        #[arg(required = true)]
        rules: Vec<String>,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Check the Wajsberg reduction over the reference corpus.
    Corpus {
        #[arg(long, default_value_t = 5)]
        max_connectives: usize,
        #[arg(long, default_value_t = 50)]
        random: usize,
        #[arg(long, default_value_t = 1957)]
        seed: u64,
        /// Print the corpus instead of checking it.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ReduceMode {
    /// A^π: replace false by the conjunction of π.
    Pi {
        formula: String,
        #[arg(long, value_delimiter = ',', required = true)]
        pi: Vec<String>,
    },
    /// W(A, π, p) = (p → π^∧) → A^p.
    Wajsberg {
        formula: String,
        #[arg(long, value_delimiter = ',')]
        pi: Vec<String>,
        #[arg(long)]
        fresh: Option<String>,
    },
    /// σ^π: reduce every image of a substitution.
    Lift {
        substitution: String,
        #[arg(long, value_delimiter = ',', required = true)]
        pi: Vec<String>,
    },
}

#[derive(Args, Debug)]
pub struct AxiomArgs {
    /// Positive axiom (repeatable).
    #[arg(long = "axiom")]
    pub axioms: Vec<String>,
    /// Take axioms from a variety spec (bundled name or JSON file).
    #[arg(long)]
    pub variety: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LogicChoice {
    Int,
    Pos,
    Ext,
}

#[derive(Args, Debug)]
pub struct LogicArgs {
    #[arg(long, value_enum, default_value = "int")]
    pub logic: LogicChoice,
    #[command(flatten)]
    pub axioms: AxiomArgs,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Algebras (names or files); `catalog` adds the bundled catalog.
    /// Defaults to all Heyting algebras up to --max-size.
    #[arg(long, value_delimiter = ',')]
    pub family: Vec<String>,
    /// Use the Brouwerian reducts of the family.
    #[arg(long)]
    pub brouwerian: bool,
}
