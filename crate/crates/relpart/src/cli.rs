//! Command-line entry points. Exit codes: 0 = success, 1 = valid negative
//! answer (non-partitionable input, failed verification, not a surface),
//! 2 = usage or input error. Every scheme or shelling a command reports as
//! found is re-verified in-process before the process exits 0.

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::Complex;
use crate::constructors::{
    partition_annulus, partition_dunce_hat, partition_graph_rel_empty,
    partition_mobius_rel_boundary, partition_mobius_rel_empty, partition_rp2, shell_disk_relative,
    AnnulusMode, GraphDecision, Rp2Mode,
};
use crate::corpus::{barycentric_subdivision, classify_surface, corpus};
use crate::io::{
    parse_facet_file, print_facet_file, read_certificate, write_certificate, CertPayload,
    Certificate,
};
use crate::relative::RelComplex;
use crate::scheme::{verify_partitioning, verify_shelling};
use crate::search::{
    decide_partitionable, find_shelling, Decision, Exhaustion, SearchConfig, ShellingDecision,
};
use crate::vectors::{f_vector, h_vector, rel_euler_char};

#[derive(Parser)]
#[command(
    name = "relpart",
    version,
    about = "Partitioning schemes and shellings of (relative) simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print f/h-vectors, Euler characteristic, purity, and classification
    Info { file: PathBuf },
    /// Decide partitionability by exhaustive search
    Decide { file: PathBuf },
    /// Search for a partitioning scheme and write it as a certificate
    Partition {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Search for a shelling and write it as a certificate
    Shell {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a certificate against the complex it targets
    Verify { file: PathBuf, cert: PathBuf },
    /// Build a verified scheme or shelling for a space of known kind
    Construct {
        kind: ConstructKind,
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the relative pair the certificate targets
        #[arg(long)]
        emit_target: Option<PathBuf>,
    },
    /// Classify a pure 2-complex as a surface
    Classify { file: PathBuf },
    /// Barycentrically subdivide a complex
    Subdivide {
        file: PathBuf,
        #[arg(short = 'n', long = "rounds", default_value_t = 1)]
        rounds: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write a built-in complex to a facet file
    Corpus {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Export the face poset as a DOT diagram (optionally colored by a
    /// partitioning certificate)
    Hasse {
        file: PathBuf,
        cert: Option<PathBuf>,
        /// DOT is the only output format; the flag is accepted for clarity
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    /// Shell a disk relative to the boundary path in the file's `---` block
    Disk,
    /// Partition a Möbius strip relative to its whole boundary
    Mobius,
    /// Partition a Möbius strip relative to {∅}
    #[value(name = "mobius0")]
    Mobius0,
    /// Partition an annulus; the `---` block picks the mode (absent or `.` =
    /// relative to {∅}; the full boundary; or one boundary cycle)
    Annulus,
    /// Partition a projective plane
    #[value(name = "rp2")]
    Rp2,
    /// Partition a projective plane relative to {∅}
    #[value(name = "rp2-0")]
    Rp2Zero,
    /// Partition a dunce hat
    Dunce,
    /// Partition a graph relative to {∅}
    Graph,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn run_command(cmd: Cmd) -> Result<i32, String> {
    match cmd {
        Cmd::Info { file } => info(&file),
        Cmd::Decide { file } => decide(&file),
        Cmd::Partition { file, output } => partition(&file, &output),
        Cmd::Shell { file, output } => shell(&file, &output),
        Cmd::Verify { file, cert } => verify(&file, &cert),
        Cmd::Construct {
            kind,
            file,
            output,
            emit_target,
        } => construct(kind, &file, &output, emit_target.as_deref()),
        Cmd::Classify { file } => classify(&file),
        Cmd::Subdivide {
            file,
            rounds,
            output,
        } => subdivide(&file, rounds, &output),
        Cmd::Corpus { name, output } => corpus_cmd(&name, &output),
        Cmd::Hasse { file, cert, dot: _ } => hasse(&file, cert.as_deref()),
    }
}

fn load(path: &Path) -> Result<RelComplex, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_facet_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_cert(path: &Path) -> Result<Certificate, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_certificate(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn save(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn info(file: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    let total = rc.total();
    println!(
        "total: {} facets, {} faces",
        total.facet_count(),
        total.face_count()
    );
    if rc.relative().is_void() {
        println!("relative part: void");
    } else {
        println!(
            "relative part: {} facets, {} faces",
            rc.relative().facet_count(),
            rc.relative().face_count()
        );
    }
    match rc.dim() {
        Some(d) => println!(
            "dim: {d}, pure: {}",
            if rc.is_pure() { "yes" } else { "no" }
        ),
        None => println!("dim: none (no relative faces)"),
    }
    println!("f = {}", f_vector(&rc));
    println!("h = {}", h_vector(&rc));
    println!("reduced euler characteristic: {}", rel_euler_char(&rc));
    if total.dim() == Some(2) && total.is_pure() {
        match classify_surface(total) {
            Ok(c) => println!("classification: {c}"),
            Err(e) => println!("classification: not a surface ({e})"),
        }
    }
    Ok(0)
}

fn decide(file: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    match decide_partitionable(&rc, &SearchConfig::default()).map_err(|e| e.to_string())? {
        Decision::Found(scheme) => {
            verify_partitioning(&rc, &scheme)
                .map_err(|v| format!("internal: found scheme fails verification: {v}"))?;
            println!("partitionable: {scheme}");
            Ok(0)
        }
        Decision::Unpartitionable(why) => {
            match why {
                Exhaustion::NegativeH { index, value } => {
                    println!("non-partitionable: negative h entry h_{index} = {value}")
                }
                Exhaustion::Exhausted { nodes } => {
                    println!("non-partitionable: search exhausted ({nodes} nodes)")
                }
            }
            Ok(1)
        }
    }
}

fn partition(file: &Path, output: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    match decide_partitionable(&rc, &SearchConfig::default()).map_err(|e| e.to_string())? {
        Decision::Found(scheme) => {
            verify_partitioning(&rc, &scheme)
                .map_err(|v| format!("internal: found scheme fails verification: {v}"))?;
            let n = scheme.len();
            let cert = Certificate::partitioning(&rc, scheme);
            save(output, &write_certificate(&cert))?;
            println!(
                "verified partitioning with {n} intervals -> {}",
                output.display()
            );
            Ok(0)
        }
        Decision::Unpartitionable(why) => {
            match why {
                Exhaustion::NegativeH { index, value } => {
                    println!("non-partitionable: negative h entry h_{index} = {value}")
                }
                Exhaustion::Exhausted { nodes } => {
                    println!("non-partitionable: search exhausted ({nodes} nodes)")
                }
            }
            Ok(1)
        }
    }
}

fn shell(file: &Path, output: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    match find_shelling(&rc).map_err(|e| e.to_string())? {
        ShellingDecision::Found(order) => {
            verify_shelling(&rc, &order)
                .map_err(|v| format!("internal: found order fails verification: {v}"))?;
            let n = order.order.len();
            let cert = Certificate::shelling(&rc, order);
            save(output, &write_certificate(&cert))?;
            println!("verified shelling of {n} facets -> {}", output.display());
            Ok(0)
        }
        ShellingDecision::NoShelling => {
            println!("not shellable (search exhausted)");
            Ok(1)
        }
    }
}

fn verify(file: &Path, cert_path: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    let cert = load_cert(cert_path)?;
    if let Err(e) = cert.check_target(&rc) {
        println!("FAIL: {e}");
        return Ok(1);
    }
    match &cert.payload {
        CertPayload::Partitioning(scheme) => match verify_partitioning(&rc, scheme) {
            Ok(()) => {
                println!("OK: partitioning with {} intervals verifies", scheme.len());
                Ok(0)
            }
            Err(v) => {
                println!("FAIL: {v}");
                Ok(1)
            }
        },
        CertPayload::Shelling(order) => match verify_shelling(&rc, order) {
            Ok(()) => {
                println!("OK: shelling of {} facets verifies", order.order.len());
                Ok(0)
            }
            Err(v) => {
                println!("FAIL: {v}");
                Ok(1)
            }
        },
    }
}

fn require_plain(rc: &RelComplex, kind: &str) -> Result<(), String> {
    if rc.relative().is_void() {
        Ok(())
    } else {
        Err(format!(
            "construct {kind} takes a plain facet file (no `---` block)"
        ))
    }
}

fn construct(
    kind: ConstructKind,
    file: &Path,
    output: &Path,
    emit_target: Option<&Path>,
) -> Result<i32, String> {
    let rc_in = load(file)?;
    let total = rc_in.total().clone();

    let (target, payload) = match kind {
        ConstructKind::Disk => {
            if rc_in.relative().is_void() {
                return Err(
                    "construct disk needs the carried boundary path in the `---` block".to_string(),
                );
            }
            let order = shell_disk_relative(&total, rc_in.relative()).map_err(|e| e.to_string())?;
            (rc_in.clone(), CertPayload::Shelling(order))
        }
        ConstructKind::Mobius => {
            require_plain(&rc_in, "mobius")?;
            let scheme = partition_mobius_rel_boundary(&total).map_err(|e| e.to_string())?;
            let bd = total.boundary().map_err(|e| e.to_string())?;
            let target = RelComplex::new(total, bd).map_err(|e| e.to_string())?;
            (target, CertPayload::Partitioning(scheme))
        }
        ConstructKind::Mobius0 => {
            require_plain(&rc_in, "mobius0")?;
            let scheme = partition_mobius_rel_empty(&total).map_err(|e| e.to_string())?;
            (
                RelComplex::rel_empty_face(total),
                CertPayload::Partitioning(scheme),
            )
        }
        ConstructKind::Annulus => {
            let gamma = rc_in.relative().clone();
            let (mode, target_gamma) = if gamma.is_void() || gamma == Complex::of_empty_face() {
                (AnnulusMode::RelEmpty, Complex::of_empty_face())
            } else {
                let bd = total.boundary().map_err(|e| e.to_string())?;
                if gamma == bd {
                    (AnnulusMode::RelFullBoundary, bd)
                } else {
                    (AnnulusMode::RelOneCycle(gamma.clone()), gamma)
                }
            };
            let scheme = partition_annulus(&total, &mode).map_err(|e| e.to_string())?;
            let target = RelComplex::new(total, target_gamma).map_err(|e| e.to_string())?;
            (target, CertPayload::Partitioning(scheme))
        }
        ConstructKind::Rp2 => {
            require_plain(&rc_in, "rp2")?;
            let scheme = partition_rp2(&total, Rp2Mode::Plain).map_err(|e| e.to_string())?;
            (RelComplex::plain(total), CertPayload::Partitioning(scheme))
        }
        ConstructKind::Rp2Zero => {
            require_plain(&rc_in, "rp2-0")?;
            let scheme = partition_rp2(&total, Rp2Mode::RelEmpty).map_err(|e| e.to_string())?;
            (
                RelComplex::rel_empty_face(total),
                CertPayload::Partitioning(scheme),
            )
        }
        ConstructKind::Dunce => {
            require_plain(&rc_in, "dunce")?;
            let scheme = partition_dunce_hat(&total).map_err(|e| e.to_string())?;
            (RelComplex::plain(total), CertPayload::Partitioning(scheme))
        }
        ConstructKind::Graph => {
            require_plain(&rc_in, "graph")?;
            match partition_graph_rel_empty(&total).map_err(|e| e.to_string())? {
                GraphDecision::Found(scheme) => (
                    RelComplex::rel_empty_face(total),
                    CertPayload::Partitioning(scheme),
                ),
                GraphDecision::TreeComponent(c) => {
                    println!(
                        "not partitionable relative to {{∅}}: component ⟨{}⟩ is a tree",
                        c.facets()
                            .iter()
                            .map(|f| f.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    return Ok(1);
                }
            }
        }
    };

    let summary = match &payload {
        CertPayload::Partitioning(scheme) => {
            verify_partitioning(&target, scheme)
                .map_err(|v| format!("internal: constructed scheme fails verification: {v}"))?;
            format!("verified partitioning with {} intervals", scheme.len())
        }
        CertPayload::Shelling(order) => {
            verify_shelling(&target, order)
                .map_err(|v| format!("internal: constructed shelling fails verification: {v}"))?;
            format!("verified shelling of {} facets", order.order.len())
        }
    };

    if let Some(path) = emit_target {
        save(path, &print_facet_file(&target))?;
        println!("target pair -> {}", path.display());
    }
    let cert = Certificate {
        target_hash: crate::io::target_hash(&target),
        payload,
    };
    save(output, &write_certificate(&cert))?;
    println!("{summary} -> {}", output.display());
    Ok(0)
}

fn classify(file: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    match classify_surface(rc.total()) {
        Ok(class) => {
            println!("{class}");
            Ok(0)
        }
        Err(e) => {
            println!("not a surface: {e}");
            Ok(1)
        }
    }
}

fn subdivide(file: &Path, rounds: u32, output: &Path) -> Result<i32, String> {
    let rc = load(file)?;
    let mut total = rc.total().clone();
    let mut gamma = rc.relative().clone();
    for _ in 0..rounds {
        total = barycentric_subdivision(&total);
        gamma = barycentric_subdivision(&gamma);
    }
    let sd = RelComplex::new(total, gamma).map_err(|e| e.to_string())?;
    save(output, &print_facet_file(&sd))?;
    println!(
        "subdivided {rounds}x: {} facets -> {}",
        sd.total().facet_count(),
        output.display()
    );
    Ok(0)
}

fn corpus_cmd(name: &str, output: &Path) -> Result<i32, String> {
    let entry = corpus(name).map_err(|e| e.to_string())?;
    let rc = entry.into_relative();
    save(output, &print_facet_file(&rc))?;
    println!(
        "{name}: {} facets -> {}",
        rc.total().facet_count(),
        output.display()
    );
    Ok(0)
}

fn hasse(file: &Path, cert_path: Option<&Path>) -> Result<i32, String> {
    let rc = load(file)?;
    let scheme = match cert_path {
        None => None,
        Some(p) => {
            let cert = load_cert(p)?;
            if let Err(e) = cert.check_target(&rc) {
                println!("FAIL: {e}");
                return Ok(1);
            }
            match cert.payload {
                CertPayload::Partitioning(s) => Some(s),
                CertPayload::Shelling(_) => {
                    return Err("a shelling certificate has no intervals to color".to_string())
                }
            }
        }
    };
    print!("{}", crate::io::emit_hasse_dot(&rc, scheme.as_ref()));
    Ok(0)
}
