//! The `tropeci` command line: argument parsing, dispatch and reports.
//!
//! Every command prints one JSON report on stdout:
//! `{"command", "inputs", "outputs", "checks", "warnings"}`. Reports are
//! deterministic; timing goes to the log on stderr.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::cohomology::{
    af_check, classify_line_pair, gram_matrix, intersection_number, interesting_pair, irreducibility_certificate,
    self_intersection, signature, stable_intersection, CycleWitness, Level, Verdict,
};
use crate::elimination::{eliminant_polytope, ProjectionSplit};
use crate::invariants::{euler_from_csm, euler_from_genera, hirzebruch_chi_p, tropical_csm, virtual_polytope_of, VirtualPolytope};
use crate::io::{self, fan_json, int_json, polytope_json, rat_json, rvec_json, tci_json, At, Instance};
use crate::lattice::WeightedFan;
use crate::matroid::{bkk_number, tci_from_mci, Tci};
use crate::patchwork::{complex_report, zero_locus, CellKind};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tropeci", version, about = "Exact tropical computations for engineered complete intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the command's outputs (for `tci`: the TCI itself) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LevelArg {
    I,
    Ii,
    Iii,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tropical complete intersection of an MCI.
    Tci {
        #[arg(long)]
        mci: PathBuf,
    },
    /// Number of solutions of a zero-dimensional MCI.
    Bkk {
        #[arg(long, required_unless_present = "tci")]
        mci: Option<PathBuf>,
        #[arg(long, conflicts_with = "mci")]
        tci: Option<PathBuf>,
    },
    /// Newton polytope of the eliminant onto the last `keep` coordinates.
    Eliminant {
        #[arg(long)]
        mci: PathBuf,
        #[arg(long)]
        keep: usize,
        #[arg(long)]
        verify_shadow: bool,
    },
    /// Hirzebruch genera χ_p; all p when `--p` is omitted.
    Genera {
        #[arg(long)]
        mci: PathBuf,
        #[arg(long)]
        p: Option<i64>,
    },
    /// Euler characteristic by characteristic classes and by genera.
    Euler {
        #[arg(long)]
        mci: PathBuf,
    },
    /// Tropical characteristic classes.
    Csm {
        #[arg(long, required_unless_present = "tci")]
        mci: Option<PathBuf>,
        #[arg(long, conflicts_with = "mci")]
        tci: Option<PathBuf>,
    },
    /// Intersection numbers: stable intersection of `--t` and `--f`, the
    /// product of `--witness` cycles, or the self-intersection of a TCI stage.
    Intersect {
        #[arg(long)]
        mci: Option<PathBuf>,
        #[arg(long)]
        tci: Option<PathBuf>,
        #[arg(long, requires = "f")]
        t: Option<PathBuf>,
        #[arg(long, requires = "t")]
        f: Option<PathBuf>,
        #[arg(long)]
        witness: Vec<PathBuf>,
    },
    /// Gram signature of PL classes on a two-dimensional fan, with the
    /// Alexandrov–Fenchel check for two classes.
    Hodge {
        #[arg(long)]
        fan: PathBuf,
        /// JSON array of PL functions.
        #[arg(long)]
        gens: PathBuf,
    },
    /// Irreducibility certificate for the last stage of a TCI.
    Irreducible {
        #[arg(long, required_unless_present = "mci")]
        tci: Option<PathBuf>,
        #[arg(long, conflicts_with = "tci")]
        mci: Option<PathBuf>,
        #[arg(long, value_enum)]
        level: LevelArg,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Whether two complementary fans form an interesting pair.
    Pair {
        #[arg(long)]
        t: PathBuf,
        #[arg(long)]
        f: PathBuf,
    },
    /// Type of a pair of line families in ℝP³.
    Lines {
        #[arg(long)]
        l: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Zero locus of a real MCI by combinatorial patchworking.
    Patchwork {
        #[arg(long)]
        rmci: PathBuf,
        #[arg(long)]
        sigma: Option<PathBuf>,
        /// Also write the complex in OFF format.
        #[arg(long)]
        off: Option<PathBuf>,
    },
    /// Runs a self-check suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Tci { .. } => "tci",
            Command::Bkk { .. } => "bkk",
            Command::Eliminant { .. } => "eliminant",
            Command::Genera { .. } => "genera",
            Command::Euler { .. } => "euler",
            Command::Csm { .. } => "csm",
            Command::Intersect { .. } => "intersect",
            Command::Hodge { .. } => "hodge",
            Command::Irreducible { .. } => "irreducible",
            Command::Pair { .. } => "pair",
            Command::Lines { .. } => "lines",
            Command::Patchwork { .. } => "patchwork",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Ambient dimension cap, from `TROPECI_MAX_DIM`.
pub fn max_dim() -> usize {
    std::env::var("TROPECI_MAX_DIM").ok().and_then(|s| s.parse().ok()).unwrap_or(5)
}

#[derive(Default)]
pub struct Report {
    inputs: Map<String, Value>,
    outputs: Map<String, Value>,
    checks: Vec<(String, bool)>,
    warnings: Vec<String>,
}

impl Report {
    fn read(&mut self, path: &Path) -> Result<Value> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
        self.inputs.insert(path.display().to_string(), json!(format!("sha256:{:x}", Sha256::digest(&bytes))));
        let text = String::from_utf8(bytes).map_err(|_| io::schema("$", format!("{}: not UTF-8", path.display())))?;
        serde_json::from_str(&text).map_err(|e| io::schema("$", format!("{}: invalid JSON: {}", path.display(), e)))
    }

    fn load(&mut self, path: &Path) -> Result<Instance> {
        let v = self.read(path)?;
        let inst = io::parse_value(&v)?.instance;
        let cap = max_dim();
        if inst.ambient() > cap {
            return Err(Error::DimMismatch { expected: cap, got: inst.ambient() });
        }
        Ok(inst)
    }

    fn load_fan(&mut self, path: &Path) -> Result<WeightedFan> {
        match self.load(path)? {
            Instance::Fan(f) => Ok(f),
            other => Err(wrong_kind("fan", &other)),
        }
    }

    /// A TCI from either a TCI file or an MCI file.
    fn load_tci(&mut self, mci: Option<&Path>, tci: Option<&Path>) -> Result<Tci> {
        let path = mci.or(tci).ok_or_else(|| io::schema("$", "an --mci or --tci file is required"))?;
        match self.load(path)? {
            Instance::Tci(t) => Ok(t),
            Instance::Mci(m) => {
                for l in m.dropped_loops() {
                    self.warnings.push(format!("dropped loop {}", l));
                }
                tci_from_mci(&m)
            }
            other => Err(wrong_kind("mci or tci", &other)),
        }
    }

    fn out(&mut self, key: &str, v: Value) {
        self.outputs.insert(key.to_string(), v);
    }

    fn check(&mut self, name: &str, pass: bool) {
        self.checks.push((name.to_string(), pass));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, p)| *p)
    }

    pub fn to_json(&self, command: &str) -> Value {
        json!({
            "command": command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": self.checks.iter().map(|(n, p)| json!({ "name": n, "pass": p })).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

fn wrong_kind(expected: &str, got: &Instance) -> Error {
    io::schema("$.kind", format!("expected a {} instance, found {}", expected, got.kind()))
}

fn level_of(l: LevelArg) -> Level {
    match l {
        LevelArg::I => Level::I,
        LevelArg::Ii => Level::Ii,
        LevelArg::Iii => Level::Iii,
    }
}

fn virtual_data(tci: &Tci) -> Result<Vec<VirtualPolytope>> {
    tci.functions.iter().map(virtual_polytope_of).collect()
}

fn signature_json((p, m, z): (usize, usize, usize)) -> Value {
    json!({ "plus": p, "minus": m, "zero": z })
}

fn dispatch(cmd: &Command, r: &mut Report) -> Result<()> {
    match cmd {
        Command::Tci { mci } => {
            let t = r.load_tci(Some(mci), None)?;
            let ok = t.verify()?;
            let balanced = t.fans.iter().all(|f| f.is_balanced_unchecked());
            r.outputs = tci_json(&t).as_object().cloned().unwrap_or_default();
            r.check("corner_loci", ok);
            r.check("balanced", balanced);
        }
        Command::Bkk { mci, tci } => {
            let t = r.load_tci(mci.as_deref(), tci.as_deref())?;
            r.out("bkk", int_json(&bkk_number(&t)?));
        }
        Command::Eliminant { mci, keep, verify_shadow } => {
            let m = match r.load(mci)? {
                Instance::Mci(m) => m,
                other => return Err(wrong_kind("mci", &other)),
            };
            let split = ProjectionSplit::new(m.support().ambient(), *keep)?;
            let e = eliminant_polytope(&m, split, *verify_shadow)?;
            r.out("polytope", polytope_json(&e.polytope));
            let checks: Vec<Value> = e
                .checks
                .iter()
                .map(|c| json!({ "v": io::ivec_json(&c.v), "projection": rat_json(&c.projection), "shadow": rat_json(&c.shadow) }))
                .collect();
            r.out("support_checks", Value::Array(checks));
            if let Some(a) = e.agree {
                r.check("routes_agree", a);
            }
        }
        Command::Genera { mci, p } => {
            let t = r.load_tci(Some(mci), None)?;
            let ms = virtual_data(&t)?;
            let n = t.ambient();
            let ps: Vec<i64> = match p {
                Some(p) => vec![*p],
                None => (0..=(n as i64 - t.codim as i64)).collect(),
            };
            let mut table = Map::new();
            for p in ps {
                table.insert(p.to_string(), int_json(&hirzebruch_chi_p(&ms, n, p)?));
            }
            r.out("chi", Value::Object(table));
        }
        Command::Euler { mci } => {
            let t = r.load_tci(Some(mci), None)?;
            let csm = euler_from_csm(&t)?;
            let gen = euler_from_genera(&virtual_data(&t)?, t.ambient())?;
            r.out("euler_from_csm", int_json(&csm));
            r.out("euler_from_genera", int_json(&gen));
            r.check("routes_agree", csm == gen);
        }
        Command::Csm { mci, tci } => {
            let t = r.load_tci(mci.as_deref(), tci.as_deref())?;
            let classes = tropical_csm(&t)?;
            let list: Vec<Value> = classes.classes.iter().map(|(c, f)| json!({ "codim": c, "fan": fan_json(f) })).collect();
            r.out("classes", Value::Array(list));
            r.check("balanced", classes.classes.iter().all(|(_, f)| f.is_balanced_unchecked()));
            if t.collapsed_at.is_none() {
                r.check("codim_k_is_t_k", classes.class(t.codim).map_or(false, |f| f.same_cycle(t.last())));
            }
        }
        Command::Intersect { mci, tci, t, f, witness } => {
            if let (Some(tp), Some(fp)) = (t, f) {
                let (a, b) = (r.load_fan(tp)?, r.load_fan(fp)?);
                r.out("stable_intersection", rat_json(&stable_intersection(&a, &b)?));
            } else if !witness.is_empty() {
                let mut ws: Vec<CycleWitness> = Vec::new();
                for w in witness {
                    let v = r.read(w)?;
                    ws.push(io::parse_witness(At::root(&v))?);
                }
                r.out("intersection_number", rat_json(&intersection_number(&ws)?));
            } else {
                let t = r.load_tci(mci.as_deref(), tci.as_deref())?;
                let j = t.ambient() + 1 - t.codim.max(1);
                r.out("j", json!(j));
                r.out("self_intersection", rat_json(&self_intersection(&t, j)?));
            }
        }
        Command::Hodge { fan, gens } => {
            let t = r.load_fan(fan)?;
            let v = r.read(gens)?;
            let a = At::root(&v);
            let gs = if a.has("gens") { a.field("gens", |x| x.list(io::parse_pl))? } else { a.list(io::parse_pl)? };
            let g = gram_matrix(&t, &gs)?;
            r.out("gram", Value::Array(g.iter().map(|row| rvec_json(row)).collect()));
            let sig = signature(&g);
            r.out("signature", signature_json(sig));
            r.out("hodge_index_pattern", json!(sig.0 == 1));
            if gs.len() == 2 {
                let af = af_check(&t, &gs[0], &gs[1])?;
                r.out(
                    "alexandrov_fenchel",
                    json!({
                        "a11": rat_json(&af.a11), "a22": rat_json(&af.a22), "a12": rat_json(&af.a12),
                        "hypothesis": af.hypothesis, "holds": af.holds,
                    }),
                );
            }
        }
        Command::Irreducible { tci, mci, level, witness } => {
            let t = r.load_tci(mci.as_deref(), tci.as_deref())?;
            let w = match witness {
                Some(p) => {
                    let v = r.read(p)?;
                    Some(io::parse_witness(At::root(&v))?)
                }
                None => None,
            };
            let rep = irreducibility_certificate(&t, level_of(*level), w.as_ref())?;
            let verdict = match rep.verdict {
                Verdict::CertifiedIrreducible => "certified_irreducible",
                Verdict::Inconclusive => "inconclusive",
            };
            r.out("verdict", json!(verdict));
            r.out("detail", json!(rep.detail));
        }
        Command::Pair { t, f } => {
            let (a, b) = (r.load_fan(t)?, r.load_fan(f)?);
            let p = interesting_pair(&a, &b)?;
            r.out("interesting", json!(p.interesting));
            r.out("connected", json!(p.connected));
            r.out("zero_product", json!(p.zero_product));
            r.out("product", rat_json(&p.product));
            if let Some(c) = &p.classification {
                r.out("line_type", json!(c.tag));
            }
        }
        Command::Lines { l, r: rp } => {
            let lv = r.read(l)?;
            let rv = r.read(rp)?;
            let ls = io::parse_lines(At::root(&lv))?;
            let rs = io::parse_lines(At::root(&rv))?;
            match classify_line_pair(&ls, &rs) {
                Ok(c) => {
                    r.out("interesting", json!(true));
                    r.out("type", json!(c.tag));
                    r.out("swapped", json!(c.swapped));
                    r.out("matches", json!(c.matches.iter().map(|(t, s)| json!({ "type": t, "swapped": s })).collect::<Vec<_>>()));
                }
                Err(Error::NotInteresting(why)) => {
                    r.out("interesting", json!(false));
                    r.out("reason", json!(why));
                }
                Err(e) => return Err(e),
            }
        }
        Command::Patchwork { rmci, sigma, off } => {
            let real = match r.load(rmci)? {
                Instance::Rmci(x) => x,
                other => return Err(wrong_kind("rmci", &other)),
            };
            let s = match sigma {
                Some(p) => Some(r.load_fan(p)?),
                None => None,
            };
            let z = zero_locus(&real, s.as_ref())?;
            let rep = complex_report(&z);
            let cells: Vec<Value> = z
                .nonempty()
                .map(|i| {
                    let c = &z.cells[i];
                    json!({
                        "index": i,
                        "dim": z.cell_dim(i),
                        "kind": if c.kind == CellKind::Vertex { "vertex" } else { "cone" },
                        "point": rvec_json(&c.apex),
                        "boundary": c.boundary,
                        "simplices": c.simplices,
                    })
                })
                .collect();
            r.out("dim", json!(z.dim()));
            r.out("cells", Value::Array(cells));
            r.out(
                "report",
                json!({
                    "components": rep.components,
                    "euler_characteristic": rep.euler_characteristic,
                    "f_vector": rep.f_vector,
                    "pseudomanifold": rep.pseudomanifold,
                }),
            );
            r.check("pseudomanifold", rep.pseudomanifold);
            if let Some(p) = off {
                std::fs::write(p, z.to_off()).map_err(|e| Error::Io(format!("{}: {}", p.display(), e)))?;
            }
        }
        Command::Verify { suite } => {
            for (name, pass) in crate::verify::run_suite(suite)? {
                r.check(&name, pass);
            }
        }
    }
    Ok(())
}

/// Runs one parsed command; returns the report and the exit code.
pub fn execute(cli: &Cli) -> (Option<Value>, i32) {
    let start = Instant::now();
    let mut report = Report::default();
    let result = dispatch(&cli.command, &mut report);
    log::info!("{} finished in {:?}", cli.command.name(), start.elapsed());
    match result {
        Ok(()) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, io::to_pretty(&Value::Object(report.outputs.clone()))) {
                    eprintln!("error: Io: {}: {}", path.display(), e);
                    return (None, EXIT_INPUT);
                }
            }
            let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            (Some(report.to_json(cli.command.name())), code)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            (None, EXIT_INPUT)
        }
    }
}

/// Parses `args` (including the program name), runs, prints, and returns
/// the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (report, code) = execute(&cli);
    if let Some(r) = report {
        print!("{}", io::to_pretty(&r));
    }
    code
}
