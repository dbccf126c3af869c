//! `sdl`: command-line front end for the germ/slice duality checks.
//!
//! Exit status is 0 when every check passes, 1 when a mathematical check
//! fails (the witness is printed), and 2 for unreadable input or an
//! exceeded size bound.

mod search;

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use sdl_core::algebra::{check_morphism, MorphismType};
use sdl_core::category::{max_size_from_env, slice_semigroup};
use sdl_core::duality::{
    counit_epsilon, germ_category, unit_eta, verify_adjunction_category, verify_adjunction_semigroup,
    verify_birestriction_equivalence, verify_counit_naturality, verify_groupoidal_category, verify_morphism_naturality,
};
use sdl_core::format::{self, category_to_json, semigroup_to_json, Instance};
use sdl_core::{classify, zoo, BiUnaryAlgebra, CoveringFunctor, FinCat, Report, SemigroupMorphism};

#[derive(Parser)]
#[command(
    name = "sdl",
    version,
    about = "Finite restriction semigroups, categories and their germ/slice duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file.
    Check { file: PathBuf },
    /// Print the classification flags of a semigroup or category.
    Classify { file: PathBuf },
    /// Write the germ category of a semigroup.
    Germs {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the slice (or bislice) semigroup of a category.
    Slices {
        file: PathBuf,
        #[arg(long)]
        bislices: bool,
        /// Largest slice semigroup to build; defaults to SDL_MAX_SIZE or 100000.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Unit or counit of the adjunction on one instance.
    Roundtrip { file: PathBuf },
    /// Triangle identities on one instance or on every instance in a directory.
    Adjunction {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        corpus: Option<PathBuf>,
    },
    /// Morphism checks between two semigroups.
    Morphism {
        #[command(subcommand)]
        command: MorphismCommand,
    },
    /// Cofunctor flags, the induced slice morphism and the covering functor.
    Translate { cofunctor: PathBuf },
    /// Write a generated instance: pt N, i N, triangular N, semilattice K,
    /// pair_groupoid N, free_arrow, parallel_pair, discrete N.
    Zoo {
        name: String,
        args: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Exploratory: look for a restriction semigroup with local units and no
    /// compatible cosupport.
    SearchNoCosupport {
        #[arg(long)]
        max_order: usize,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 60)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum MorphismCommand {
    /// Check that MAP is a morphism of the given type from S to T. MAP is a
    /// morphism file or a JSON array of target indices.
    Check {
        source: PathBuf,
        target: PathBuf,
        map: String,
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=4))]
        ty: u8,
    },
}

/// Input or size problem; exits with status 2.
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn print_report(r: &Report) -> bool {
    print!("{r}");
    r.all_passed()
}

fn max_size(flag: Option<usize>) -> usize {
    flag.unwrap_or_else(max_size_from_env)
}

fn write(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn check(file: &Path) -> Outcome {
    let inst = format::read_instance(file)?;
    match &inst {
        Instance::Semigroup(s) => println!(
            "semigroup: {} elements, plus {}",
            s.len(),
            if s.has_plus() { "given" } else { "absent" }
        ),
        Instance::Category(c) => println!("category: {} objects, {} arrows", c.n_objects(), c.n_arrows()),
        Instance::Morphism { morphism, .. } => {
            println!(
                "morphism: {} → {} elements",
                morphism.source.len(),
                morphism.target.len()
            );
            let mut r = Report::new();
            r.record("morphism.homomorphism", morphism.homomorphism_witness());
            return Ok(print_report(&r));
        }
        Instance::Cofunctor { cofunctor, .. } => {
            let f = cofunctor.flags();
            println!(
                "cofunctor: {} → {} arrows, injective={} surjective={} action_injective={}",
                cofunctor.source.n_arrows(),
                cofunctor.target.n_arrows(),
                f.injective_on_arrows,
                f.surjective_on_arrows,
                f.action_injective
            );
        }
    }
    println!("PASS schema");
    Ok(true)
}

fn classify_cmd(file: &Path) -> Outcome {
    match format::read_instance(file)? {
        Instance::Semigroup(s) => {
            let c = classify(&s);
            for (name, value) in c.flags() {
                match c.witness(name).filter(|_| !value) {
                    Some(w) => println!("{name} false witness={}", w.describe(&s)),
                    None => println!("{name} {value}"),
                }
            }
            if c.plus_inferred {
                println!("note: cosupport inferred");
            }
        }
        Instance::Category(c) => {
            println!("objects {}", c.n_objects());
            println!("arrows {}", c.n_arrows());
            match c.is_groupoid() {
                Ok(_) => println!("groupoid true"),
                Err(x) => println!("groupoid false witness={}", c.arrow_name(x)),
            }
        }
        other => return Err(InputError(format!("cannot classify a {} file", other.kind()))),
    }
    Ok(true)
}

fn germs(file: &Path, output: &Path) -> Outcome {
    let s = Arc::new(format::read_semigroup(file)?);
    let g = germ_category(s)?;
    write(output, &category_to_json(&g.category))?;
    println!(
        "germ category: {} objects, {} arrows",
        g.category.n_objects(),
        g.category.n_arrows()
    );
    Ok(true)
}

fn slices(file: &Path, bislices: bool, bound: Option<usize>, output: &Path) -> Outcome {
    let c = Arc::new(format::read_category(file)?);
    let ss = slice_semigroup(c, bislices, max_size(bound))?;
    write(output, &semigroup_to_json(&ss.algebra))?;
    println!(
        "{}: {} elements",
        if bislices { "bislices" } else { "slices" },
        ss.len()
    );
    Ok(true)
}

fn roundtrip(file: &Path) -> Outcome {
    let max = max_size(None);
    match format::read_instance(file)? {
        Instance::Semigroup(s) => {
            let s = Arc::new(s);
            let unit = unit_eta(s.clone(), max)?;
            let mut ok = print_report(&unit.report);
            let iso = if unit.eta.is_surjective() { "iso" } else { "not iso" };
            let inj = if unit.eta.is_injective() {
                "injective"
            } else {
                "not injective"
            };
            let bd = if classify(&s).boolean_birestriction {
                let r = verify_birestriction_equivalence(s, max)?;
                ok &= print_report(&r);
                if r.all_passed() {
                    "pass"
                } else {
                    "fail"
                }
            } else {
                "not applicable"
            };
            println!("η {inj}, {iso}; BD-equivalence {bd}");
            Ok(ok)
        }
        Instance::Category(c) => {
            let c = Arc::new(c);
            let counit = counit_epsilon(c.clone(), max)?;
            let mut ok = print_report(&counit.report);
            let g = verify_groupoidal_category(c, max)?;
            ok &= print_report(&g.report);
            let iso = if counit.epsilon.is_isomorphism() {
                "iso"
            } else {
                "not iso"
            };
            println!("ε {iso}; groupoid {}", g.groupoid);
            Ok(ok)
        }
        other => Err(InputError(format!(
            "roundtrip needs a semigroup or category, got {}",
            other.kind()
        ))),
    }
}

enum Adjoinable {
    Semigroup(BiUnaryAlgebra),
    Category(FinCat),
}

fn load_adjoinable(file: &Path) -> Result<Adjoinable, InputError> {
    match format::read_instance(file)? {
        Instance::Semigroup(s) => Ok(Adjoinable::Semigroup(s)),
        Instance::Category(c) => Ok(Adjoinable::Category(c)),
        other => Err(InputError(format!(
            "{}: adjunction needs a semigroup or category, got {}",
            file.display(),
            other.kind()
        ))),
    }
}

fn adjunction_report(inst: Adjoinable, max: usize) -> Result<Report, InputError> {
    Ok(match inst {
        Adjoinable::Semigroup(s) => verify_adjunction_semigroup(Arc::new(s), max)?,
        Adjoinable::Category(c) => verify_adjunction_category(Arc::new(c), max)?,
    })
}

fn adjunction(file: Option<&Path>, corpus: Option<&Path>) -> Result<ExitCode, InputError> {
    let max = max_size(None);
    if let Some(file) = file {
        let ok = print_report(&adjunction_report(load_adjoinable(file)?, max)?);
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let dir = corpus.ok_or_else(|| InputError("give a FILE or --corpus DIR".into()))?;
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| InputError(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let results: Vec<Option<Result<Report, InputError>>> = files
        .par_iter()
        .map(|f| match format::read_instance(f) {
            Ok(Instance::Semigroup(s)) => Some(adjunction_report(Adjoinable::Semigroup(s), max)),
            Ok(Instance::Category(c)) => Some(adjunction_report(Adjoinable::Category(c), max)),
            Ok(_) => None,
            Err(e) => Some(Err(e.into())),
        })
        .collect();
    let (mut failed, mut broken) = (false, false);
    for (f, r) in files.iter().zip(results) {
        match r {
            None => println!("SKIP {}", f.display()),
            Some(Ok(r)) => {
                println!("== {}", f.display());
                failed |= !print_report(&r);
            }
            Some(Err(InputError(e))) => {
                println!("ERROR {}: {e}", f.display());
                broken = true;
            }
        }
    }
    Ok(if broken {
        ExitCode::from(2)
    } else if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn parse_map(map: &str) -> Result<Vec<usize>, InputError> {
    let path = Path::new(map);
    if path.exists() {
        return match format::read_instance(path)? {
            Instance::Morphism { morphism, .. } => Ok(morphism.map),
            other => Err(InputError(format!(
                "{map}: expected a morphism file, got {}",
                other.kind()
            ))),
        };
    }
    serde_json::from_str(map).map_err(|e| InputError(format!("MAP is neither a file nor a JSON index array: {e}")))
}

fn morphism_check(source: &Path, target: &Path, map: &str, ty: u8) -> Outcome {
    let s = Arc::new(format::read_semigroup(source)?);
    let t = Arc::new(format::read_semigroup(target)?);
    let f = SemigroupMorphism::new(s.clone(), t.clone(), parse_map(map)?)?;
    let ty = MorphismType::from_number(ty).expect("clap restricts the range");
    let v = check_morphism(&f, ty);
    let mut r = Report::new();
    r.record(
        format!("morphism.{}", ty.to_string().replace(' ', "")),
        v.witness.clone().filter(|_| !v.passed),
    );
    if v.passed && germ_category(s).is_ok() && germ_category(t).is_ok() {
        r.extend(verify_morphism_naturality(&f, max_size(None))?);
    }
    Ok(print_report(&r))
}

fn translate(file: &Path) -> Outcome {
    let Instance::Cofunctor { cofunctor: f, .. } = format::read_instance(file)? else {
        return Err(InputError(format!("{}: expected a cofunctor file", file.display())));
    };
    let max = max_size(None);
    let flags = f.flags();
    println!(
        "injective={} surjective={} bijective={} action_injective={}",
        flags.injective_on_arrows, flags.surjective_on_arrows, flags.bijective_on_arrows, flags.action_injective
    );
    let (push, mut r) = f.to_morphism(max)?;
    println!("slice morphism: {:?}", push.map);
    r.extend(verify_counit_naturality(&f, max)?);
    if flags.bijective_on_arrows {
        let g = CoveringFunctor::from_cofunctor(&f)?;
        r.check("covering.round_trip", g.to_cofunctor()? == f, || {
            "cofunctor changed".into()
        });
    }
    Ok(print_report(&r))
}

fn zoo_instance(name: &str, args: &[usize]) -> Result<String, InputError> {
    let one = || match args {
        [n] => Ok(*n),
        _ => Err(InputError(format!("{name} takes one size argument"))),
    };
    let none = || {
        if args.is_empty() {
            Ok(())
        } else {
            Err(InputError(format!("{name} takes no arguments")))
        }
    };
    Ok(match name {
        "pt" => semigroup_to_json(&zoo::gen_pt(one()?)?),
        "i" => semigroup_to_json(&zoo::gen_i(one()?)?),
        "triangular" => semigroup_to_json(&zoo::gen_triangular(one()?)?),
        "semilattice" => semigroup_to_json(&zoo::gen_semilattice(one()?)?),
        "pair_groupoid" => category_to_json(&zoo::gen_pair_groupoid(one()?)?),
        "discrete" => category_to_json(&zoo::gen_discrete(one()?)?),
        "free_arrow" => {
            none()?;
            category_to_json(&zoo::gen_free_arrow())
        }
        "parallel_pair" => {
            none()?;
            category_to_json(&zoo::gen_parallel_pair())
        }
        other => return Err(InputError(format!("unknown zoo instance `{other}`"))),
    })
}

fn search_cmd(max_order: usize, budget: u64) -> Outcome {
    if max_order > 6 {
        return Err(InputError(format!(
            "--max-order {max_order} is beyond the searchable range 1..=6"
        )));
    }
    let p = search::search(max_order, Duration::from_secs(budget));
    println!(
        "tables {} candidates {} completed_order {}{}",
        p.tables,
        p.candidates,
        p.completed_order,
        if p.timed_out { " (budget exhausted)" } else { "" }
    );
    match p.found {
        Some((s, why)) => {
            println!("FAIL cosupport.exists witness={why}");
            print!("{}", semigroup_to_json(&s));
            Ok(false)
        }
        None => {
            println!("PASS cosupport.exists");
            Ok(true)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    let ok = match cli.command {
        Command::Check { file } => check(&file)?,
        Command::Classify { file } => classify_cmd(&file)?,
        Command::Germs { file, output } => germs(&file, &output)?,
        Command::Slices {
            file,
            bislices,
            max_size,
            output,
        } => slices(&file, bislices, max_size, &output)?,
        Command::Roundtrip { file } => roundtrip(&file)?,
        Command::Adjunction { file, corpus } => return adjunction(file.as_deref(), corpus.as_deref()),
        Command::Morphism {
            command:
                MorphismCommand::Check {
                    source,
                    target,
                    map,
                    ty,
                },
        } => morphism_check(&source, &target, &map, ty)?,
        Command::Translate { cofunctor } => translate(&cofunctor)?,
        Command::Zoo { name, args, output } => {
            write(&output, &zoo_instance(&name, &args)?)?;
            true
        }
        Command::SearchNoCosupport { max_order, budget } => search_cmd(max_order, budget)?,
    };
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
