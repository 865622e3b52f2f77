//! `lieclass` command-line interface.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lieclass::rootsys::RootSystem;
use lieclass_cli::{commands, svg, CliError, Format};

#[derive(Parser)]
#[command(
    name = "lieclass",
    version,
    about = "Root systems, lattice centers, affine alcoves, real-form classification, \
             strongly orthogonal rank, and polar decomposition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, highest-root labels and Weyl order of a root system
    Roots {
        family: String,
        rank: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Also write an SVG picture of the roots (rank <= 2)
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
    },
    /// Center of the simply connected group, with the minuscule cross-check
    Center {
        family: String,
        rank: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Fundamental alcove vertices; optionally reduce a point into it
    Alcove {
        family: String,
        rank: usize,
        /// Comma-separated rational coordinates in the coweight basis
        #[arg(long)]
        point: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Also write an SVG picture with the affine hyperplanes (rank <= 2)
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
    },
    /// Real-form classification table for one type, or --all for the sweep
    Classify {
        family: Option<String>,
        rank: Option<usize>,
        /// Classify every family at all ranks up to 8
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Classify a single Vogan diagram given involution and painting
    Vogan {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// id | flip | swapI,J (1-based node indices)
        #[arg(long, default_value = "id")]
        involution: String,
        /// none | comma-separated 1-based node indices
        #[arg(long, default_value = "none")]
        paint: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Strongly orthogonal rank at a Hermitian node
    #[command(name = "so-rank")]
    SoRank {
        family: String,
        rank: usize,
        /// 1-based node index with highest-root coefficient 1
        #[arg(long)]
        node: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Polar decomposition of a matrix read from a JSON file
    Polar {
        /// JSON file {"n": 2, "entries": [[...], ...]}
        matrix_file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Roots { family, rank, format, svg: svg_path } => {
            let t = commands::parse_type(&family, rank)?;
            print!("{}", commands::cmd_roots(t, format.into()));
            if let Some(path) = svg_path {
                let rs = RootSystem::build(t);
                let doc = svg::render_roots(&rs)?;
                std::fs::write(&path, doc)
                    .map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?;
            }
            Ok(())
        }
        Command::Center { family, rank, format } => {
            let t = commands::parse_type(&family, rank)?;
            print!("{}", commands::cmd_center(t, format.into()));
            Ok(())
        }
        Command::Alcove { family, rank, point, format, svg: svg_path } => {
            let t = commands::parse_type(&family, rank)?;
            print!("{}", commands::cmd_alcove(t, point.as_deref(), format.into())?);
            if let Some(path) = svg_path {
                let rs = RootSystem::build(t);
                let doc = svg::render_alcove(&rs)?;
                std::fs::write(&path, doc)
                    .map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?;
            }
            Ok(())
        }
        Command::Classify { family, rank, all, format } => {
            if all {
                print!("{}", commands::cmd_classify_all(format.into()));
                return Ok(());
            }
            let (Some(family), Some(rank)) = (family, rank) else {
                return Err(CliError::Usage(
                    "classify needs FAMILY RANK or --all".to_string(),
                ));
            };
            let t = commands::parse_type(&family, rank)?;
            print!("{}", commands::cmd_classify(t, format.into()));
            Ok(())
        }
        Command::Vogan { family, rank, involution, paint, format } => {
            let t = commands::parse_type(&family, rank)?;
            print!("{}", commands::cmd_vogan(t, &involution, &paint, format.into())?);
            Ok(())
        }
        Command::SoRank { family, rank, node, format } => {
            let t = commands::parse_type(&family, rank)?;
            print!("{}", commands::cmd_so_rank(t, node, format.into())?);
            Ok(())
        }
        Command::Polar { matrix_file, format } => {
            print!("{}", commands::cmd_polar(&matrix_file, format.into())?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
