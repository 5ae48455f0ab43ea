//! Command-line front end: generators, bounds, splitting, verification and drawing.
//!
//! Exit codes: 0 success or accept, 1 reject or UNSAT, 2 search budget
//! exhausted, 3 input error.

pub mod draw;

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use splitthick::bounds::bounds_report;
use splitthick::exact::{find_k_split, split_thickness_exact, ExactThickness, SearchBudget, SearchStatus};
use splitthick::hardness::{random_planar_cycle_instance, reduce, KBlock};
use splitthick::planarity::{check_empire_conditions, check_quadrangulation_conditions, EmpireReport};
use splitthick::splitters::{split_by_degree, split_by_pseudoforests, split_complete_bipartite, split_projective, split_torus};
use splitthick::{fixtures, generators, io, verify_certificate, Graph, SplitCertificate};

/// Process outcome other than an input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Reject,
    Exhausted,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Reject => 1,
            Status::Exhausted => 2,
        }
    }
}

pub const INPUT_ERROR: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "splitthick", version, about = "Planar k-splits: bounds, constructions, exact search and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph or bundled fixture to standard output.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Print lower and upper bounds on split thickness with their reasons.
    Bounds {
        /// Edge-list file, or `-` for standard input.
        file: PathBuf,
    },
    /// Compute a split and print its certificate.
    Split {
        /// Input file: edge list, or torus/signed file for those methods.
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Copy budget. Required semantics for `exact`; a ceiling for the others.
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 60.0)]
        budget_seconds: f64,
    },
    /// Check a certificate; violations go to standard error.
    Verify {
        cert: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        /// Also require a triangulation with separated empires.
        #[arg(long, conflicts_with = "quad")]
        empire: bool,
        /// Also require a quadrangulation with separated empires.
        #[arg(long)]
        quad: bool,
    },
    /// Render a planar graph or a certificate's split graph as SVG.
    Draw { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// K_n.
    Complete { n: usize },
    /// K_{m,n}.
    Bipartite { m: usize, n: usize },
    /// Two copies of K_12 sharing one vertex.
    DoubleK12,
    Petersen,
    /// Uniform random graph with n vertices and m edges.
    Random {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random planar graph: a random triangulation with edges kept at rate `keep`.
    Planar {
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        keep: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random 3-SAT instance with a planar clause cycle, in the SAT file format.
    Sat {
        vars: usize,
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hardness reduction graph of a SAT file.
    Reduction {
        #[arg(long)]
        sat: PathBuf,
        #[arg(long, value_enum, default_value_t = Block::K78)]
        kblock: Block,
    },
    /// A bundled fixture file, verbatim.
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Degree,
    Columns,
    Torus,
    Projective,
    Pseudoforest,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Block {
    K12,
    K78,
}

impl From<Block> for KBlock {
    fn from(b: Block) -> Self {
        match b {
            Block::K12 => KBlock::K12,
            Block::K78 => KBlock::K78,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureName {
    K12Empire,
    K78Quad,
    K7Torus,
    K5Torus,
    K6Signed,
    K5Signed,
    ExampleSat,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    io::parse_edge_list(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Runs one command. `Err` means an input error (exit code 3).
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match cli.command {
        Command::Gen { family } => {
            out.write_all(generate(family)?.as_bytes())?;
            Ok(Status::Success)
        }
        Command::Bounds { file } => {
            let g = read_graph(&file)?;
            writeln!(out, "{}", bounds_report(&g))?;
            Ok(Status::Success)
        }
        Command::Split { file, method, k, budget_nodes, budget_seconds } => {
            if !budget_seconds.is_finite() || budget_seconds < 0.0 {
                bail!("--budget-seconds must be a non-negative number");
            }
            let budget = SearchBudget::new(budget_nodes, Duration::from_secs_f64(budget_seconds));
            split(&file, method, k, budget, out, err)
        }
        Command::Verify { cert, k, empire, quad } => {
            let text = read_input(&cert)?;
            let cert = io::parse_certificate(&text).with_context(|| format!("parsing {}", cert.display()))?;
            verify(&cert, k, empire, quad, out, err)
        }
        Command::Draw { file } => {
            let text = read_input(&file)?;
            let drawing = if text.trim_start().starts_with('{') {
                let cert = io::parse_certificate(&text).with_context(|| format!("parsing {}", file.display()))?;
                let split = cert.split_graph().map_err(|e| anyhow!("certificate is malformed: {e}"))?;
                draw::draw_certificate(&cert, &split)
            } else {
                let g = io::parse_edge_list(&text).with_context(|| format!("parsing {}", file.display()))?;
                draw::draw_graph(&g)
            }
            .map_err(|_| anyhow!("input is not planar, so it has no straight-line drawing"))?;
            out.write_all(draw::to_svg(&drawing).as_bytes())?;
            Ok(Status::Success)
        }
    }
}

fn generate(family: Family) -> Result<String> {
    let graph = match family {
        Family::Complete { n } => generators::complete(n)?,
        Family::Bipartite { m, n } => generators::complete_bipartite(m, n)?,
        Family::DoubleK12 => generators::double_k12(),
        Family::Petersen => generators::petersen(),
        Family::Random { n, m, seed } => {
            if n == 0 || m > n * (n - 1) / 2 {
                bail!("a simple graph on {n} vertices cannot have {m} edges");
            }
            generators::random_graph(n, m, &mut ChaCha8Rng::seed_from_u64(seed))
        }
        Family::Planar { n, keep, seed } => {
            if n == 0 || !(0.0..=1.0).contains(&keep) {
                bail!("need n >= 1 and keep in [0, 1]");
            }
            generators::random_planar(n, keep, &mut ChaCha8Rng::seed_from_u64(seed))
        }
        Family::Sat { vars, clauses, seed } => {
            if vars < 3 {
                bail!("clauses use three distinct variables, so at least 3 are needed");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let inst = random_planar_cycle_instance(vars, clauses, 10_000, &mut rng)
                .ok_or_else(|| anyhow!("no instance with a planar incidence graph found; try more variables"))?;
            return Ok(io::emit_sat(&inst));
        }
        Family::Reduction { sat, kblock } => {
            let inst = io::parse_sat(&read_input(&sat)?).with_context(|| format!("parsing {}", sat.display()))?;
            let hg = reduce(&inst, kblock.into())?;
            let mut s = String::new();
            writeln!(
                s,
                "# reduction with {:?} blocks: {} variables, {} clauses, {} K-vertices",
                KBlock::from(kblock),
                inst.num_vars,
                inst.clauses.len(),
                hg.kvertices.len()
            )?;
            s.push_str(&io::emit_edge_list(&hg.graph));
            return Ok(s);
        }
        Family::Fixture { name } => {
            return Ok(match name {
                FixtureName::K12Empire => fixtures::K12_EMPIRE,
                FixtureName::K78Quad => fixtures::K78_QUAD,
                FixtureName::K7Torus => fixtures::K7_TORUS,
                FixtureName::K5Torus => fixtures::K5_TORUS,
                FixtureName::K6Signed => fixtures::K6_SIGNED,
                FixtureName::K5Signed => fixtures::K5_SIGNED,
                FixtureName::ExampleSat => fixtures::EXAMPLE_CNF,
            }
            .to_string())
        }
    };
    Ok(io::emit_edge_list(&graph))
}

fn split(
    file: &Path,
    method: Method,
    k: Option<usize>,
    budget: SearchBudget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    let text = read_input(file)?;
    let context = || format!("parsing {}", file.display());
    let cert = match method {
        Method::Torus => split_torus(&io::parse_torus(&text).with_context(context)?)?,
        Method::Projective => split_projective(&io::parse_signed(&text).with_context(context)?)?,
        Method::Degree => split_by_degree(&io::parse_edge_list(&text).with_context(context)?),
        Method::Columns => split_complete_bipartite(&io::parse_edge_list(&text).with_context(context)?)?,
        Method::Pseudoforest => split_by_pseudoforests(&io::parse_edge_list(&text).with_context(context)?).certificate,
        Method::Exact => {
            let g = io::parse_edge_list(&text).with_context(context)?;
            return exact(&g, k, budget, out, err);
        }
    };
    let used = cert.max_copies();
    if let Some(k) = k {
        if used > k {
            writeln!(err, "REJECT: the {method:?} split uses {used} copies of some vertex, more than k = {k}")?;
            return Ok(Status::Reject);
        }
    }
    writeln!(err, "k {used}: {} split vertices, {} split edges", cert.total_copies(), cert.edges.len())?;
    out.write_all(io::emit_certificate(&cert).as_bytes())?;
    Ok(Status::Success)
}

fn exact(g: &Graph, k: Option<usize>, budget: SearchBudget, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    let emit = |cert: &SplitCertificate, out: &mut dyn Write| out.write_all(io::emit_certificate(cert).as_bytes());
    match k {
        Some(k) => {
            if k == 0 {
                bail!("-k must be at least 1");
            }
            let outcome = find_k_split(g, k, budget);
            let nodes = outcome.nodes_explored;
            match (outcome.status, outcome.certificate) {
                (SearchStatus::Found, Some(cert)) => {
                    writeln!(err, "FOUND k {k} after {nodes} nodes")?;
                    emit(&cert, out)?;
                    Ok(Status::Success)
                }
                (SearchStatus::Unsat, _) => {
                    writeln!(err, "UNSAT: no planar {k}-split exists ({nodes} nodes)")?;
                    Ok(Status::Reject)
                }
                _ => {
                    writeln!(err, "EXHAUSTED after {nodes} nodes")?;
                    Ok(Status::Exhausted)
                }
            }
        }
        None => {
            let k_max = bounds_report(g).upper.unwrap_or_else(|| g.max_degree().div_ceil(2).max(1));
            match split_thickness_exact(g, k_max, budget) {
                ExactThickness::Exact { k, certificate } => {
                    writeln!(err, "FOUND split thickness {k}")?;
                    emit(&certificate, out)?;
                    Ok(Status::Success)
                }
                ExactThickness::AboveLimit => {
                    writeln!(err, "UNSAT: no planar split with at most {k_max} copies")?;
                    Ok(Status::Reject)
                }
                ExactThickness::Unknown => {
                    writeln!(err, "EXHAUSTED before the split thickness was settled")?;
                    Ok(Status::Exhausted)
                }
            }
        }
    }
}

fn describe(r: &EmpireReport) -> String {
    format!(
        "{} vertices, {} edges, {} faces (lengths {}..={})",
        r.vertex_count,
        r.edge_count,
        r.face_count(),
        r.face_lengths.iter().min().unwrap_or(&0),
        r.face_lengths.iter().max().unwrap_or(&0)
    )
}

fn verify(cert: &SplitCertificate, k: usize, empire: bool, quad: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    let report = verify_certificate(cert, k);
    if !report.accepted() {
        writeln!(out, "REJECT")?;
        for v in &report.violations {
            writeln!(err, "{v}")?;
        }
        return Ok(Status::Reject);
    }
    if empire || quad {
        let checked = if empire { check_empire_conditions(cert) } else { check_quadrangulation_conditions(cert) };
        let r = match checked {
            Ok(r) => r,
            Err(e) => {
                writeln!(out, "REJECT")?;
                writeln!(err, "{e}")?;
                return Ok(Status::Reject);
            }
        };
        if !r.passed() {
            writeln!(out, "REJECT")?;
            let failed = [
                (r.every_vertex_split, "some vertex does not have exactly two copies"),
                (r.extremal_faces, "not every face has the required length"),
                (r.empires_separated, "a face meets two copies of one vertex"),
            ];
            for (ok, why) in failed {
                if !ok {
                    writeln!(err, "{why}")?;
                }
            }
            writeln!(err, "{}", describe(&r))?;
            return Ok(Status::Reject);
        }
        writeln!(out, "ACCEPT k {k}: {}", describe(&r))?;
        return Ok(Status::Success);
    }
    writeln!(out, "ACCEPT k {k}: {} split vertices, {} split edges", cert.total_copies(), cert.edges.len())?;
    Ok(Status::Success)
}
