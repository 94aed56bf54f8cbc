//! Subcommands. Each one resolves its inputs from the document store, runs
//! the engine, and returns an [`Outcome`].

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use sacts::classes::{
    classify_map, failing_square, in_class, is_flat_bounded, is_pure_epi_bounded, is_stable_bounded, ActClass,
    ClassDescriptor,
};
use sacts::constructions::{pullback, pushout, rees_quotient, tensor, ConstructionResult, PullbackOutcome};
use sacts::hom::{find_filler, HomProblem, Square};
use sacts::wfs::{
    centred_wfs_precover, check_precover, cof_certificate, factor_centred_precover, factor_unitary_split,
    factor_via_precover, precover, small_object_factorize, CoverMode, Factorization, PrecoverOutcome, SoaConfig,
    SoaStart, SoaStatus, WfsViolation,
};
use sacts::{Act, ActMap, EmptinessPolicy, Universe};

use crate::document::{parse, print, Body, Store};
use crate::error::CliError;
use crate::report::{Outcome, Verdict};

/// An input: `path` (its last document) or `path#name`.
#[derive(Debug, Clone)]
pub struct Input {
    pub path: PathBuf,
    pub name: Option<String>,
}

impl std::str::FromStr for Input {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.rsplit_once('#') {
            Some((p, n)) if !n.is_empty() => Ok(Input {
                path: p.into(),
                name: Some(n.into()),
            }),
            _ => Ok(Input {
                path: s.into(),
                name: None,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    /// Unitary monos and split epis.
    USp,
    /// Unitary monos with complement in a class, and maps the class is
    /// projective for.
    Precover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Precover,
    Cover,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every law of every supplied document.
    Validate { files: Vec<Input> },
    /// Print documents in canonical form.
    Canon { files: Vec<Input> },
    /// Enumerate equivariant maps between two acts.
    Hom {
        source: Input,
        target: Input,
        /// Report every map instead of the least one.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        injective: bool,
    },
    /// Find a filler for a square, or decide whether one map lifts against
    /// another.
    Lift {
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<Input>,
    },
    /// Classify a map, or decide membership in a map class.
    Classify {
        map: Input,
        #[arg(long)]
        class: Option<String>,
    },
    /// Factor a map in a weak factorization system.
    Factor {
        map: Input,
        #[arg(long, value_enum, default_value = "u-sp")]
        system: System,
        /// Class document for `--system precover`.
        #[arg(long)]
        class: Option<Input>,
    },
    /// Pushout of `f: A → B` along `u: A → C`.
    Pushout { f: Input, u: Input },
    /// Pullback of `f: B → D` and `g: C → D`.
    Pullback {
        f: Input,
        g: Input,
        #[arg(long)]
        allow_empty: bool,
    },
    /// Tensor product of a right act and a left act.
    Tensor { right: Input, left: Input },
    /// Rees quotient of the target of a mono by its image.
    Rees {
        map: Input,
        #[arg(long)]
        allow_non_mono: bool,
    },
    /// Flatness against left subact inclusions up to a bound.
    Flat {
        act: Input,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Purity of an epi against acts up to a bound.
    Pure {
        map: Input,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Stability of a mono against left maps up to a bound.
    Stable {
        map: Input,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Canonical precover of an act by an explicit class.
    Precover {
        act: Input,
        #[arg(long)]
        class: Input,
    },
    /// Whether a map is a precover or cover for an explicit class.
    CoverCheck {
        map: Input,
        #[arg(long)]
        class: Input,
        #[arg(long, value_enum, default_value = "cover")]
        mode: Mode,
    },
    /// Check the weak factorization system conditions over a universe.
    WfsVerify(WfsArgs),
    /// Run the small object argument.
    Soa {
        map: Input,
        /// Generator maps (every map document in these files).
        #[arg(long, required = true, num_args = 1..)]
        gens: Vec<PathBuf>,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        /// Form the first pushout even when the map already lifts.
        #[arg(long)]
        pushout_first: bool,
    },
    /// Search for a cofibration certificate.
    CofCert {
        map: Input,
        #[arg(long, required = true, num_args = 1..)]
        gens: Vec<PathBuf>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Precover of a centred act obtained from the factorization of `0 → A`.
    CentredPrecover {
        act: Input,
        #[arg(long)]
        class: Input,
        #[arg(long)]
        probe: Input,
    },
    /// Run the command stored in a job document.
    Job { job: Input },
}

#[derive(Debug, Args)]
pub struct WfsArgs {
    /// A universe-spec document.
    spec: Option<Input>,
    /// A monoid document, when no spec is given.
    #[arg(long)]
    monoid: Option<Input>,
    /// Largest act size; overrides the spec.
    #[arg(long)]
    universe: Option<usize>,
    #[arg(long, default_value = "unitary")]
    left: String,
    #[arg(long, default_value = "split-epi")]
    right: String,
    #[arg(long, value_enum, default_value = "u-sp")]
    factorizer: System,
    /// Class document for the precover factorizer.
    #[arg(long)]
    class: Option<Input>,
}

/// Values for options left unset on the command line.
#[derive(Debug, Default, Clone)]
pub struct Defaults(BTreeMap<String, usize>);

impl Defaults {
    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let io = |e: std::io::Error| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        };
        let text = std::fs::read_to_string(path).map_err(io)?;
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let obj = v.as_object().ok_or_else(|| CliError::Schema {
            path: "$".into(),
            message: "defaults must be an object".into(),
        })?;
        let mut out = BTreeMap::new();
        for (k, val) in obj {
            let n = val.as_u64().and_then(|n| usize::try_from(n).ok()).ok_or_else(|| CliError::Schema {
                path: format!("$.{k}"),
                message: "expected a non-negative integer".into(),
            })?;
            out.insert(k.clone(), n);
        }
        Ok(Defaults(out))
    }

    fn get(&self, flag: Option<usize>, key: &str, builtin: usize) -> Result<usize, CliError> {
        let n = flag.or_else(|| self.0.get(key).copied()).unwrap_or(builtin);
        if n == 0 {
            return Err(CliError::Usage(format!("--{key} must be at least 1")));
        }
        Ok(n)
    }
}

struct Ctx {
    store: Store,
}

impl Ctx {
    fn load(inputs: &[&Input], extra: &[PathBuf]) -> Result<(Self, Vec<String>), CliError> {
        let mut paths: Vec<PathBuf> = extra.to_vec();
        for i in inputs {
            if !paths.contains(&i.path) {
                paths.push(i.path.clone());
            }
        }
        let store = Store::load(&paths)?;
        let mut names = Vec::new();
        for i in inputs {
            names.push(match &i.name {
                Some(n) => n.clone(),
                None => last_name(&i.path)?,
            });
        }
        Ok((Ctx { store }, names))
    }
}

fn last_name(path: &std::path::Path) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let docs = parse(&text).map_err(|e| e.in_file(path))?;
    docs.last().map(|d| d.name.clone()).ok_or_else(|| CliError::Schema {
        path: format!("{}: $", path.display()),
        message: "empty document list".into(),
    })
}

/// Every map document in the given files, in file order.
fn maps_in(store: &Store, paths: &[PathBuf]) -> Result<Vec<(String, ActMap)>, CliError> {
    let mut out = Vec::new();
    for p in paths {
        let text = std::fs::read_to_string(p).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        })?;
        for d in parse(&text).map_err(|e| e.in_file(p))? {
            if let Body::Map { .. } = d.body {
                out.push((d.name.clone(), store.map(&d.name)?));
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no generator maps in the --gens files".into()));
    }
    Ok(out)
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("engine reports serialize")
}

fn construction_json(c: &ConstructionResult) -> Value {
    let legs: BTreeMap<&str, &[usize]> = c.legs.iter().map(|(n, m)| (n.as_str(), m.values())).collect();
    json!({"object": to_json(&c.object), "legs": legs, "construction": c.provenance.name()})
}

fn factorization_json(f: &Factorization) -> Value {
    json!({
        "middle": to_json(f.middle()),
        "left": f.left.values(),
        "right": f.right.values(),
        "left_class": f.left_class.name(),
        "right_class": f.right_class.name(),
        "left_evidence": to_json(&f.left_evidence),
        "right_evidence": to_json(&f.right_evidence),
        "certified": f.certified(),
    })
}

fn rows(a: &Act) -> String {
    format!("{:?}", a.table_rows())
}

/// Parse a map-class descriptor: `mono`, `epi`, `split-epi`, `split-mono`,
/// `unitary`, `unitary-complement-in:CLASS`,
/// `centred-unitary-complement-in:CLASS`, `pure-epi:N`, `flat-rees-mono:N`,
/// `projective-for:CLASS:N`, `explicit:M,..`, `rlp:M,..`, `llp:M,..`.
pub fn descriptor(store: &Store, text: &str) -> Result<ClassDescriptor, CliError> {
    let mut parts = text.splitn(2, ':');
    let head = parts.next().unwrap_or_default();
    let arg = parts.next();
    let need = || arg.ok_or_else(|| CliError::Usage(format!("class \"{head}\" needs an argument")));
    let number = |s: &str| -> Result<usize, CliError> {
        match s.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!("\"{s}\" is not a bound of at least 1"))),
        }
    };
    let maps = |s: &str| -> Result<Vec<ActMap>, CliError> { s.split(',').map(|n| store.map(n)).collect() };
    let d = match head {
        "mono" => ClassDescriptor::Mono,
        "epi" => ClassDescriptor::Epi,
        "split-epi" => ClassDescriptor::SplitEpi,
        "split-mono" => ClassDescriptor::SplitMono,
        "unitary" => ClassDescriptor::Unitary,
        "unitary-complement-in" => ClassDescriptor::UnitaryWithComplementIn(store.class(need()?)?),
        "centred-unitary-complement-in" => ClassDescriptor::CentredUnitaryWithComplementIn(store.class(need()?)?),
        "pure-epi" => ClassDescriptor::PureEpiBounded(number(need()?)?),
        "flat-rees-mono" => ClassDescriptor::FlatReesMonoBounded(number(need()?)?),
        "projective-for" => {
            let (c, n) = need()?
                .rsplit_once(':')
                .ok_or_else(|| CliError::Usage("projective-for needs CLASS:N".into()))?;
            ClassDescriptor::ProjectiveFor(store.class(c)?, number(n)?)
        }
        "explicit" => ClassDescriptor::ExplicitList(maps(need()?)?),
        "rlp" => ClassDescriptor::RlpAgainst(maps(need()?)?),
        "llp" => ClassDescriptor::LlpAgainst(maps(need()?)?),
        other => return Err(CliError::Usage(format!("unknown map class \"{other}\""))),
    };
    Ok(d)
}

fn engine<T>(name: &str, r: sacts::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::engine(name, e))
}

pub fn run(cmd: &Command, defaults: &Defaults, lib: &[PathBuf]) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate { files } => validate(files, lib),
        Command::Canon { files } => canon(files),
        Command::Hom {
            source,
            target,
            all,
            injective,
        } => {
            let (ctx, n) = Ctx::load(&[source, target], lib)?;
            let (a, b) = (ctx.store.act(&n[0])?, ctx.store.act(&n[1])?);
            let mut p = engine(&n[0], HomProblem::new(&a, &b))?;
            if *injective {
                p = p.injective();
            }
            let maps: Vec<Vec<usize>> = if *all {
                p.all().iter().map(|m| m.values().to_vec()).collect()
            } else {
                p.first().iter().map(|m| m.values().to_vec()).collect()
            };
            let verdict = Verdict::of(!maps.is_empty(), false);
            let lines = maps.iter().map(|m| format!("map {m:?}")).collect::<Vec<_>>();
            Ok(Outcome::new(
                "hom",
                verdict,
                "equivariant maps between acts",
                json!({"source": n[0], "target": n[1], "maps": maps, "count": maps.len()}),
            )
            .lines(lines))
        }
        Command::Lift { inputs } => lift(inputs, lib),
        Command::Classify { map, class } => {
            let (ctx, n) = Ctx::load(&[map], lib)?;
            let f = ctx.store.map(&n[0])?;
            match class {
                None => {
                    let c = classify_map(&f);
                    Ok(Outcome::new("classify", Verdict::True, "map classification", to_json(&c))
                        .line(format!("{c:?}")))
                }
                Some(text) => {
                    let d = descriptor(&ctx.store, text)?;
                    let dec = engine(&n[0], in_class(&f, &d))?;
                    let verdict = Verdict::of(dec.holds, dec.is_bounded());
                    Ok(Outcome::new(
                        "classify",
                        verdict,
                        "membership in a map class",
                        json!({"class": d.name(), "decision": to_json(&dec)}),
                    )
                    .line(format!("class {}: {}", d.name(), dec.holds)))
                }
            }
        }
        Command::Factor { map, system, class } => {
            let mut inputs = vec![map];
            if let Some(c) = class {
                inputs.push(c);
            }
            let (ctx, n) = Ctx::load(&inputs, lib)?;
            let f = ctx.store.map(&n[0])?;
            let fz = match system {
                System::USp => engine(&n[0], factor_unitary_split(&f))?,
                System::Precover => {
                    let c = n
                        .get(1)
                        .ok_or_else(|| CliError::Usage("--system precover needs --class".into()))?;
                    let x = ctx.store.class(c)?;
                    engine(&n[0], factor_via_precover(&f, &x))?
                }
            };
            let bounded = fz.left_evidence.iter().chain(&fz.right_evidence).any(|d| d.is_bounded());
            Ok(Outcome::new(
                "factor",
                Verdict::of(fz.certified(), bounded),
                match system {
                    System::USp => "factorization into a unitary mono and a split epi",
                    System::Precover => "factorization through a precover",
                },
                factorization_json(&fz),
            )
            .line(format!("middle size {}", fz.middle().size()))
            .line(format!("left {:?}", fz.left.values()))
            .line(format!("right {:?}", fz.right.values())))
        }
        Command::Pushout { f, u } => {
            let (ctx, n) = Ctx::load(&[f, u], lib)?;
            let p = engine(&n[0], pushout(&ctx.store.map(&n[0])?, &ctx.store.map(&n[1])?))?;
            Ok(
                Outcome::new("pushout", Verdict::True, "pushout as a quotient of a coproduct", construction_json(&p))
                    .line(format!("object {}", rows(&p.object))),
            )
        }
        Command::Pullback { f, g, allow_empty } => {
            let (ctx, n) = Ctx::load(&[f, g], lib)?;
            let policy = if *allow_empty {
                EmptinessPolicy::Permit
            } else {
                EmptinessPolicy::Reject
            };
            match engine(&n[0], pullback(&ctx.store.map(&n[0])?, &ctx.store.map(&n[1])?, policy))? {
                PullbackOutcome::Exists(p) => Ok(Outcome::new(
                    "pullback",
                    Verdict::True,
                    "pullback of a cospan",
                    construction_json(&p),
                )
                .line(format!("object {}", rows(&p.object)))),
                PullbackOutcome::Nonexistent { f_image, g_image } => Ok(Outcome::new(
                    "pullback",
                    Verdict::False,
                    "pullback of a cospan",
                    json!({"f_image": f_image, "g_image": g_image}),
                )
                .line("the images are disjoint")),
            }
        }
        Command::Tensor { right, left } => {
            let (ctx, n) = Ctx::load(&[right, left], lib)?;
            let t = engine(&n[0], tensor(&ctx.store.act(&n[0])?, &ctx.store.act(&n[1])?))?;
            let classes = t.classes();
            Ok(Outcome::new(
                "tensor",
                Verdict::True,
                "tensor product as a quotient of the product",
                json!({"classes": classes, "class_of": t.class_table(), "size": t.num_classes()}),
            )
            .line(format!("{} classes", t.num_classes())))
        }
        Command::Rees { map, allow_non_mono } => {
            let (ctx, n) = Ctx::load(&[map], lib)?;
            let r = engine(&n[0], rees_quotient(&ctx.store.map(&n[0])?, !allow_non_mono))?;
            Ok(
                Outcome::new("rees", Verdict::True, "Rees quotient by the image", construction_json(&r))
                    .line(format!("object {}", rows(&r.object))),
            )
        }
        Command::Flat { act, bound } => {
            let (ctx, n) = Ctx::load(&[act], lib)?;
            let a = ctx.store.act(&n[0])?;
            let bound = defaults.get(*bound, "bound", 3)?;
            let r = engine(&n[0], is_flat_bounded(&a, bound))?;
            let lines = r
                .checked
                .iter()
                .map(|c| {
                    format!(
                        "inclusion {:?} into {}: {}",
                        c.subact,
                        rows(&c.ambient),
                        if c.injective { "injective" } else { "not injective" }
                    )
                })
                .collect::<Vec<_>>();
            Ok(Outcome::new(
                "flat",
                Verdict::of(r.holds, true),
                "flatness against left subact inclusions",
                to_json(&r),
            )
            .line(format!("bound {bound}"))
            .lines(lines))
        }
        Command::Pure { map, bound } => {
            let (ctx, n) = Ctx::load(&[map], lib)?;
            let bound = defaults.get(*bound, "bound", 3)?;
            let r = engine(&n[0], is_pure_epi_bounded(&ctx.store.map(&n[0])?, bound))?;
            let mut o = Outcome::new(
                "pure",
                Verdict::of(r.holds, true),
                "purity: lifting from every small act",
                to_json(&r),
            )
            .line(format!("bound {bound}, {} maps checked", r.maps_checked));
            if let Some((m, h)) = &r.failing {
                o = o.line(format!("no lift for {:?} from {}", h.values(), rows(m)));
            }
            Ok(o)
        }
        Command::Stable { map, bound } => {
            let (ctx, n) = Ctx::load(&[map], lib)?;
            let bound = defaults.get(*bound, "bound", 3)?;
            let r = engine(&n[0], is_stable_bounded(&ctx.store.map(&n[0])?, bound))?;
            let mut o = Outcome::new(
                "stable",
                Verdict::of(r.holds, true),
                "stability of a mono under tensoring",
                to_json(&r),
            )
            .line(format!("bound {bound}, {} maps checked", r.maps_checked));
            if let Some(w) = &r.failure {
                o = o.line(format!(
                    "witness: b={} x={} a={} y={} for left map {:?}",
                    w.b,
                    w.x,
                    w.a,
                    w.y,
                    w.map.values()
                ));
            }
            Ok(o)
        }
        Command::Precover { act, class } => {
            let (ctx, n) = Ctx::load(&[act, class], lib)?;
            let a = ctx.store.act(&n[0])?;
            let x = ctx.store.class(&n[1])?;
            match engine(&n[0], precover(&a, &x))? {
                PrecoverOutcome::Precover(p) => {
                    let summands: Vec<Value> = p
                        .summands
                        .iter()
                        .map(|(i, h)| json!({"member": i, "map": h.values()}))
                        .collect();
                    Ok(Outcome::new(
                        "precover",
                        Verdict::True,
                        "precover as a coproduct over hom-sets",
                        json!({"object": to_json(p.map.source()), "map": p.map.values(), "summands": summands}),
                    )
                    .line(format!("{} summands, object size {}", p.summands.len(), p.map.source().size())))
                }
                PrecoverOutcome::Nonexistent { members } => Ok(Outcome::new(
                    "precover",
                    Verdict::False,
                    "precover as a coproduct over hom-sets",
                    json!({"nonexistent": true, "members": members}),
                )
                .line("no member maps to the act")),
            }
        }
        Command::CoverCheck { map, class, mode } => {
            let (ctx, n) = Ctx::load(&[map, class], lib)?;
            let g = ctx.store.map(&n[0])?;
            let x = ctx.store.class(&n[1])?;
            let mode = match mode {
                Mode::Precover => CoverMode::Precover,
                Mode::Cover => CoverMode::Cover,
            };
            let r = engine(&n[0], check_precover(&g, &x, mode))?;
            let mut o = Outcome::new(
                "cover-check",
                Verdict::of(r.holds, false),
                "precover and cover conditions",
                to_json(&r),
            );
            if let Some((i, h)) = &r.unfactored {
                o = o.line(format!("member {i} map {:?} does not factor", h.values()));
            }
            if let Some(e) = &r.non_iso_endomap {
                o = o.line(format!("endomap {:?} fixes the map but is not an isomorphism", e.values()));
            }
            Ok(o)
        }
        Command::WfsVerify(args) => wfs_verify(args, lib),
        Command::Soa {
            map,
            gens,
            max_steps,
            max_size,
            pushout_first,
        } => {
            let (ctx, n) = Ctx::load(&[map], &[lib, gens.as_slice()].concat())?;
            let g = ctx.store.map(&n[0])?;
            let named = maps_in(&ctx.store, gens)?;
            let gs: Vec<ActMap> = named.iter().map(|(_, m)| m.clone()).collect();
            let config = SoaConfig {
                max_steps: defaults.get(*max_steps, "max-steps", 8)?,
                max_size: defaults.get(*max_size, "max-size", 512)?,
                start: if *pushout_first {
                    SoaStart::PushoutFirst
                } else {
                    SoaStart::CheckFirst
                },
            };
            let r = engine(&n[0], small_object_factorize(&g, &gs, config))?;
            let check = engine(&n[0], r.verify(&gs))?;
            let cert = r.cof_certificate();
            let verdict = match r.status {
                SoaStatus::Completed => Verdict::True,
                SoaStatus::CapReached => Verdict::Bounded,
            };
            let sizes: Vec<usize> = r.stages.iter().map(|s| s.object.size()).collect();
            let mut report = to_json(&r);
            report["stage_count"] = json!(r.steps());
            report["stage_sizes"] = json!(sizes);
            report["check"] = to_json(&check);
            report["cof_certificate"] = to_json(&cert);
            report["generators"] = json!(named.iter().map(|(n, _)| n).collect::<Vec<_>>());
            let mut o = Outcome::new(
                "soa",
                verdict,
                "small object argument, iterated finitely",
                report,
            )
            .line(format!("stages {}", r.steps()));
            for (k, s) in sizes.iter().enumerate() {
                o = o.line(format!("stage {} size {s}", k + 1));
            }
            if let Some(cap) = r.cap {
                o = o.line(format!("cap reached: {cap:?}"));
            }
            Ok(o)
        }
        Command::CofCert { map, gens, max_len } => {
            let (ctx, n) = Ctx::load(&[map], &[lib, gens.as_slice()].concat())?;
            let f = ctx.store.map(&n[0])?;
            let gs: Vec<ActMap> = maps_in(&ctx.store, gens)?.into_iter().map(|(_, m)| m).collect();
            let len = defaults.get(*max_len, "max-len", 4)?;
            match engine(&n[0], cof_certificate(&f, &gs, len))? {
                Some(c) => {
                    let ok = c.verify(&f, &gs);
                    Ok(Outcome::new(
                        "cof-cert",
                        Verdict::of(ok, false),
                        "cofibrations are retracts of composites of pushouts",
                        json!({"certificate": to_json(&c), "verified": ok}),
                    )
                    .line(format!("{} pushout steps, retract {}", c.steps.len(), c.retract.is_some())))
                }
                None => Ok(Outcome::new(
                    "cof-cert",
                    Verdict::Bounded,
                    "cofibrations are retracts of composites of pushouts",
                    json!({"certificate": null, "max_len": len}),
                )
                .line(format!("no certificate with at most {len} steps"))),
            }
        }
        Command::CentredPrecover { act, class, probe } => {
            let (ctx, n) = Ctx::load(&[act, class, probe], lib)?;
            let a = ctx.store.act(&n[0])?;
            let x = ctx.store.class(&n[1])?;
            let p = ctx.store.act(&n[2])?;
            let size = 1 + x.explicit_members().map_or(0, |m| m.iter().map(Act::size).sum::<usize>()) * a.size();
            let left = ClassDescriptor::CentredUnitaryWithComplementIn(x.clone());
            let right = ClassDescriptor::ProjectiveFor(x.clone(), size.max(1));
            let fact = |f: &ActMap| factor_centred_precover(f, &x);
            let r = engine(&n[0], centred_wfs_precover(&a, &left, &right, &fact, &p))?;
            let bounded = r.left_decision.is_bounded() || r.right_decision.is_bounded();
            Ok(Outcome::new(
                "centred-precover",
                Verdict::of(r.holds, bounded),
                "precover from the factorization of the zero map",
                to_json(&r),
            )
            .line(format!("A* size {}", r.a_star.size()))
            .line(format!("{} probe maps filled", r.fillers.len())))
        }
        Command::Job { .. } => Err(CliError::Usage("jobs cannot be nested".into())),
    }
}

fn validate(files: &[Input], lib: &[PathBuf]) -> Result<Outcome, CliError> {
    let inputs: Vec<&Input> = files.iter().collect();
    let (ctx, _) = Ctx::load(&inputs, lib)?;
    let mut docs = Vec::new();
    let mut all_valid = true;
    let mut lines = Vec::new();
    for (name, kind, r) in ctx.store.check_all() {
        match r {
            Ok(()) => {
                docs.push(json!({"name": name, "kind": kind, "valid": true}));
                lines.push(format!("{kind} {name}: valid"));
            }
            Err(e) => match e.laws() {
                Some(report) => {
                    all_valid = false;
                    lines.push(format!("{kind} {name}: {report}"));
                    docs.push(json!({"name": name, "kind": kind, "valid": false, "violations": to_json(report)}));
                }
                None => return Err(e),
            },
        }
    }
    Ok(Outcome::new(
        "validate",
        Verdict::of(all_valid, false),
        "monoid, act and map laws",
        json!({"documents": docs}),
    )
    .lines(lines))
}

fn canon(files: &[Input]) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for i in files {
        let text = std::fs::read_to_string(&i.path).map_err(|e| CliError::Io {
            path: i.path.display().to_string(),
            message: e.to_string(),
        })?;
        let docs = parse(&text).map_err(|e| e.in_file(&i.path))?;
        out.push(print(&docs));
    }
    let lines = out.clone();
    Ok(Outcome::new("canon", Verdict::True, "", json!(out)).lines(lines))
}

fn lift(inputs: &[Input], lib: &[PathBuf]) -> Result<Outcome, CliError> {
    let refs: Vec<&Input> = inputs.iter().collect();
    let (ctx, n) = Ctx::load(&refs, lib)?;
    if let [square] = &n[..] {
        let [f, g, u, v] = ctx.store.square(square)?;
        let sq = engine(square, Square::new(f, g, u, v))?;
        let filler = engine(square, find_filler(&sq))?;
        let verdict = Verdict::of(filler.is_some(), false);
        let line = match &filler {
            Some(h) => format!("filler {:?}", h.values()),
            None => "no filler".into(),
        };
        return Ok(Outcome::new(
            "lift",
            verdict,
            "diagonal filler of a commuting square",
            json!({"square": square, "filler": filler.as_ref().map(|h| h.values().to_vec())}),
        )
        .line(line));
    }
    let (f, g) = (ctx.store.map(&n[0])?, ctx.store.map(&n[1])?);
    let fail = engine(&n[0], failing_square(&f, &g))?;
    let mut o = Outcome::new(
        "lift",
        Verdict::of(fail.is_none(), false),
        "left lifting property against a map",
        json!({"left": n[0], "right": n[1], "failing_square": fail.as_ref().map(|(u, v)| json!({"u": u, "v": v}))}),
    );
    if let Some((u, v)) = &fail {
        o = o.lines(square_lines(&f, &g, u, v));
    }
    Ok(o)
}

fn square_lines(f: &ActMap, g: &ActMap, u: &[usize], v: &[usize]) -> Vec<String> {
    vec![
        format!("f {:?}", f.values()),
        format!("g {:?}", g.values()),
        format!("u {u:?}"),
        format!("v {v:?}"),
    ]
}

fn wfs_verify(args: &WfsArgs, lib: &[PathBuf]) -> Result<Outcome, CliError> {
    let mut inputs = Vec::new();
    inputs.extend(args.spec.iter());
    inputs.extend(args.monoid.iter());
    inputs.extend(args.class.iter());
    let (ctx, n) = Ctx::load(&inputs, lib)?;
    let (monoid, side, size) = match (&args.spec, &args.monoid) {
        (Some(_), _) => ctx.store.universe_spec(&n[0])?,
        (None, Some(_)) => (ctx.store.monoid(&n[0])?, sacts::Side::Right, 0),
        (None, None) => return Err(CliError::Usage("wfs-verify needs a universe spec or --monoid".into())),
    };
    let size = args.universe.unwrap_or(size);
    if size == 0 {
        return Err(CliError::Usage("--universe must be at least 1".into()));
    }
    let left = descriptor(&ctx.store, &args.left)?;
    let right = descriptor(&ctx.store, &args.right)?;
    let universe = Universe::enumerate(&monoid, size, side);
    let class: Option<ActClass> = match args.factorizer {
        System::USp => None,
        System::Precover => {
            let name = n
                .last()
                .filter(|_| args.class.is_some())
                .ok_or_else(|| CliError::Usage("--factorizer precover needs --class".into()))?;
            Some(ctx.store.class(name)?)
        }
    };
    let report = match &class {
        None => sacts::wfs::wfs_verify(&left, &right, &universe, &factor_unitary_split),
        Some(x) => sacts::wfs::wfs_verify(&left, &right, &universe, &|f: &ActMap| factor_via_precover(f, x)),
    }
    .map_err(|e| CliError::engine("wfs-verify", e))?;
    let mut o = Outcome::new(
        "wfs-verify",
        Verdict::of(report.holds, report.bounded),
        "weak factorization system: factorization, lifting, retract closure",
        to_json(&report),
    )
    .line(format!(
        "universe size {} with {} maps; {} left, {} right, {} pairs",
        size, report.maps, report.left_members, report.right_members, report.pairs_checked
    ));
    for v in report.violations.iter().take(5) {
        match v {
            WfsViolation::Lifting { left, right, u, v } => {
                o = o.line("failing square:");
                o = o.lines(square_lines(left, right, u.values(), v.values()));
            }
            other => o = o.line(serde_json::to_string(&to_json(other)).expect("json")),
        }
    }
    Ok(o)
}
