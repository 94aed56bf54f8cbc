//! JSON documents. Names exist only here; the engine works with dense
//! indices and resolved objects.
//!
//! A file holds one document or an array of documents. Later documents may
//! refer to earlier ones, and to documents in other supplied files, by name.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};

use sacts::classes::{ActClass, ActClassKind, Closure};
use sacts::{Act, ActMap, FiniteMonoid, Side};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Monoid {
        identity: usize,
        mul: Vec<Vec<usize>>,
        zero: Option<usize>,
    },
    Act {
        monoid: String,
        side: Side,
        action: Vec<Vec<usize>>,
        centred: bool,
    },
    Map {
        source: String,
        target: String,
        values: Vec<usize>,
    },
    Square {
        f: String,
        g: String,
        u: String,
        v: String,
    },
    Class(ClassBody),
    UniverseSpec {
        monoid: String,
        side: Side,
        max_act_size: usize,
    },
    Job {
        args: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassBody {
    /// `explicit`, `flat`, `projective` or `fp`.
    pub class: String,
    pub members: Vec<String>,
    pub bound: Option<usize>,
    pub closure: Closure,
    pub exact_projective: bool,
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Monoid { .. } => "monoid",
            Body::Act { .. } => "act",
            Body::Map { .. } => "map",
            Body::Square { .. } => "square",
            Body::Class(_) => "class",
            Body::UniverseSpec { .. } => "universe-spec",
            Body::Job { .. } => "job",
        }
    }
}

struct Cursor<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> CliError {
        CliError::Schema {
            path: self.path.clone(),
            message: message.into(),
        }
    }

    fn object(&self) -> Result<&'a Map<String, Value>, CliError> {
        self.value.as_object().ok_or_else(|| self.err("expected an object"))
    }

    fn field(&self, key: &str) -> Result<Cursor<'a>, CliError> {
        self.opt_field(key)?
            .ok_or_else(|| self.err(format!("missing field \"{key}\"")))
    }

    fn opt_field(&self, key: &str) -> Result<Option<Cursor<'a>>, CliError> {
        Ok(self.object()?.get(key).map(|value| Cursor {
            value,
            path: format!("{}.{key}", self.path),
        }))
    }

    fn items(&self) -> Result<Vec<Cursor<'a>>, CliError> {
        let arr = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, value)| Cursor {
                value,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    fn index(&self) -> Result<usize, CliError> {
        self.value
            .as_u64()
            .and_then(|v| usize::try_from(v).ok())
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    fn string(&self) -> Result<String, CliError> {
        self.value
            .as_str()
            .map(str::to_owned)
            .ok_or_else(|| self.err("expected a string"))
    }

    fn boolean(&self) -> Result<bool, CliError> {
        self.value.as_bool().ok_or_else(|| self.err("expected a boolean"))
    }

    fn indices(&self) -> Result<Vec<usize>, CliError> {
        self.items()?.iter().map(Cursor::index).collect()
    }

    fn table(&self) -> Result<Vec<Vec<usize>>, CliError> {
        self.items()?.iter().map(Cursor::indices).collect()
    }

    fn strings(&self) -> Result<Vec<String>, CliError> {
        self.items()?.iter().map(Cursor::string).collect()
    }

    fn side(&self) -> Result<Side, CliError> {
        match self.string()?.as_str() {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(self.err(format!("side must be \"right\" or \"left\", found \"{other}\""))),
        }
    }

    /// Reject keys outside `allowed`.
    fn only(&self, allowed: &[&str]) -> Result<(), CliError> {
        for key in self.object()?.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(self.err(format!("unknown field \"{key}\"")));
            }
        }
        Ok(())
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Right => "right",
        Side::Left => "left",
    }
}

fn parse_one(c: &Cursor<'_>) -> Result<Document, CliError> {
    let kind = c.field("kind")?.string()?;
    let name = c.field("name")?.string()?;
    if name.is_empty() {
        return Err(c.field("name")?.err("name must be nonempty"));
    }
    let body = match kind.as_str() {
        "monoid" => {
            c.only(&["kind", "name", "size", "identity", "mul", "zero"])?;
            let mul = c.field("mul")?.table()?;
            let size = c.field("size")?;
            if size.index()? != mul.len() {
                return Err(size.err(format!("size {} but mul has {} rows", size.index()?, mul.len())));
            }
            Body::Monoid {
                identity: c.field("identity")?.index()?,
                mul,
                zero: c.opt_field("zero")?.map(|z| z.index()).transpose()?,
            }
        }
        "act" => {
            c.only(&["kind", "name", "monoid", "side", "size", "action", "centred"])?;
            let side = c.field("side")?.side()?;
            let action = c.field("action")?.table()?;
            let size_field = c.field("size")?;
            let size = size_field.index()?;
            let found = match side {
                Side::Right => action.len(),
                Side::Left => action.first().map_or(0, Vec::len),
            };
            if size != found {
                return Err(size_field.err(format!("size {size} but the action table describes {found} elements")));
            }
            Body::Act {
                monoid: c.field("monoid")?.string()?,
                side,
                action,
                centred: c.opt_field("centred")?.map(|v| v.boolean()).transpose()?.unwrap_or(false),
            }
        }
        "map" => {
            c.only(&["kind", "name", "source", "target", "values"])?;
            Body::Map {
                source: c.field("source")?.string()?,
                target: c.field("target")?.string()?,
                values: c.field("values")?.indices()?,
            }
        }
        "square" => {
            c.only(&["kind", "name", "f", "g", "u", "v"])?;
            Body::Square {
                f: c.field("f")?.string()?,
                g: c.field("g")?.string()?,
                u: c.field("u")?.string()?,
                v: c.field("v")?.string()?,
            }
        }
        "class" => {
            c.only(&["kind", "name", "class", "members", "bound", "closure", "exact_projective"])?;
            let class = c.field("class")?;
            let which = class.string()?;
            let members = c.opt_field("members")?.map(|m| m.strings()).transpose()?.unwrap_or_default();
            let bound = c.opt_field("bound")?.map(|b| b.index()).transpose()?;
            match which.as_str() {
                "explicit" => {
                    if members.is_empty() {
                        return Err(c.err("an explicit class needs a nonempty \"members\" list"));
                    }
                }
                "flat" | "projective" | "fp" => {
                    if !matches!(bound, Some(b) if b >= 1) {
                        return Err(c.err(format!("class \"{which}\" needs \"bound\" of at least 1")));
                    }
                }
                other => return Err(class.err(format!("unknown class \"{other}\""))),
            }
            let mut closure = Closure::default();
            if let Some(cl) = c.opt_field("closure")? {
                cl.only(&["coproducts", "summands", "retracts"])?;
                let flag = |k: &str| -> Result<bool, CliError> {
                    Ok(cl.opt_field(k)?.map(|v| v.boolean()).transpose()?.unwrap_or(false))
                };
                closure = Closure {
                    coproducts: flag("coproducts")?,
                    summands: flag("summands")?,
                    retracts: flag("retracts")?,
                };
            }
            Body::Class(ClassBody {
                class: which,
                members,
                bound,
                closure,
                exact_projective: c
                    .opt_field("exact_projective")?
                    .map(|v| v.boolean())
                    .transpose()?
                    .unwrap_or(false),
            })
        }
        "universe-spec" => {
            c.only(&["kind", "name", "monoid", "side", "max_act_size"])?;
            let n = c.field("max_act_size")?;
            if n.index()? == 0 {
                return Err(n.err("max_act_size must be at least 1"));
            }
            Body::UniverseSpec {
                monoid: c.field("monoid")?.string()?,
                side: c.field("side")?.side()?,
                max_act_size: n.index()?,
            }
        }
        "job" => {
            c.only(&["kind", "name", "args"])?;
            let args = c.field("args")?;
            let list = args.strings()?;
            if list.is_empty() {
                return Err(args.err("a job needs at least the command name"));
            }
            Body::Job { args: list }
        }
        other => return Err(c.field("kind")?.err(format!("unknown kind \"{other}\""))),
    };
    Ok(Document { name, body })
}

/// Parse a file's text: one document or an array of documents.
pub fn parse(text: &str) -> Result<Vec<Document>, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let root = Cursor {
        value: &value,
        path: "$".into(),
    };
    if value.is_array() {
        root.items()?.iter().map(parse_one).collect()
    } else {
        Ok(vec![parse_one(&root)?])
    }
}

impl Document {
    pub fn to_value(&self) -> Value {
        let mut v = match &self.body {
            Body::Monoid { identity, mul, zero } => {
                let mut v = json!({"size": mul.len(), "identity": identity, "mul": mul});
                if let Some(z) = zero {
                    v["zero"] = json!(z);
                }
                v
            }
            Body::Act {
                monoid,
                side,
                action,
                centred,
            } => {
                let size = match side {
                    Side::Right => action.len(),
                    Side::Left => action.first().map_or(0, Vec::len),
                };
                let mut v = json!({"monoid": monoid, "side": side_name(*side), "size": size, "action": action});
                if *centred {
                    v["centred"] = json!(true);
                }
                v
            }
            Body::Map { source, target, values } => json!({"source": source, "target": target, "values": values}),
            Body::Square { f, g, u, v } => json!({"f": f, "g": g, "u": u, "v": v}),
            Body::Class(c) => {
                let mut v = json!({"class": c.class});
                if !c.members.is_empty() {
                    v["members"] = json!(c.members);
                }
                if let Some(b) = c.bound {
                    v["bound"] = json!(b);
                }
                if c.closure != Closure::default() {
                    v["closure"] = json!({
                        "coproducts": c.closure.coproducts,
                        "summands": c.closure.summands,
                        "retracts": c.closure.retracts,
                    });
                }
                if c.exact_projective {
                    v["exact_projective"] = json!(true);
                }
                v
            }
            Body::UniverseSpec {
                monoid,
                side,
                max_act_size,
            } => json!({"monoid": monoid, "side": side_name(*side), "max_act_size": max_act_size}),
            Body::Job { args } => json!({"args": args}),
        };
        v["kind"] = json!(self.body.kind());
        v["name"] = json!(self.name);
        v
    }
}

/// Compact JSON with sorted keys.
pub fn print(docs: &[Document]) -> String {
    let v = match docs {
        [one] => one.to_value(),
        many => Value::Array(many.iter().map(Document::to_value).collect()),
    };
    serde_json::to_string(&v).expect("values serialize")
}

/// Every document from the supplied files, addressable by name.
#[derive(Debug, Default)]
pub struct Store {
    docs: BTreeMap<String, Document>,
    /// The last document of each file, in argument order.
    subjects: Vec<String>,
}

impl Store {
    pub fn load(paths: &[impl AsRef<Path>]) -> Result<Self, CliError> {
        let mut store = Store::default();
        for p in paths {
            let p = p.as_ref();
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })?;
            let docs = parse(&text).map_err(|e| e.in_file(p))?;
            store.add(docs).map_err(|e| e.in_file(p))?;
        }
        Ok(store)
    }

    pub fn add(&mut self, docs: Vec<Document>) -> Result<(), CliError> {
        let Some(last) = docs.last() else {
            return Err(CliError::Schema {
                path: "$".into(),
                message: "empty document list".into(),
            });
        };
        self.subjects.push(last.name.clone());
        for d in docs {
            if let Some(old) = self.docs.get(&d.name) {
                if old != &d {
                    return Err(CliError::Reference(format!("name \"{}\" is defined twice", d.name)));
                }
            }
            self.docs.insert(d.name.clone(), d);
        }
        Ok(())
    }

    pub fn subjects(&self) -> &[String] {
        &self.subjects
    }

    pub fn get(&self, name: &str) -> Result<&Document, CliError> {
        self.docs
            .get(name)
            .ok_or_else(|| CliError::Reference(format!("no document named \"{name}\"")))
    }

    fn expect(&self, name: &str, kind: &str) -> Result<&Body, CliError> {
        let d = self.get(name)?;
        if d.body.kind() != kind {
            return Err(CliError::Reference(format!(
                "\"{name}\" is a {}, expected a {kind}",
                d.body.kind()
            )));
        }
        Ok(&d.body)
    }

    pub fn monoid(&self, name: &str) -> Result<FiniteMonoid, CliError> {
        let Body::Monoid { identity, mul, zero } = self.expect(name, "monoid")? else {
            unreachable!()
        };
        let m = FiniteMonoid::new(mul.clone(), *identity).map_err(|e| CliError::engine(name, e))?;
        if let Some(z) = zero {
            if m.zero() != Some(*z) {
                return Err(CliError::Schema {
                    path: format!("{name}.zero"),
                    message: format!("{z} is not a two-sided zero"),
                });
            }
        }
        Ok(m)
    }

    pub fn act(&self, name: &str) -> Result<Act, CliError> {
        let Body::Act {
            monoid,
            side,
            action,
            centred,
        } = self.expect(name, "act")?
        else {
            unreachable!()
        };
        let m = self.monoid(monoid)?;
        let act = match side {
            Side::Right => Act::right(&m, action.clone()),
            Side::Left => Act::left(&m, action.clone()),
        }
        .map_err(|e| CliError::engine(name, e))?;
        let act = act.with_centred(*centred);
        act.validate().into_result_for(name)?;
        Ok(act)
    }

    pub fn map(&self, name: &str) -> Result<ActMap, CliError> {
        let Body::Map { source, target, values } = self.expect(name, "map")? else {
            unreachable!()
        };
        let (a, b) = (self.act(source)?, self.act(target)?);
        ActMap::new(&a, &b, values.clone()).map_err(|e| CliError::engine(name, e))
    }

    pub fn square(&self, name: &str) -> Result<[ActMap; 4], CliError> {
        let Body::Square { f, g, u, v } = self.expect(name, "square")? else {
            unreachable!()
        };
        Ok([self.map(f)?, self.map(g)?, self.map(u)?, self.map(v)?])
    }

    pub fn class(&self, name: &str) -> Result<ActClass, CliError> {
        let Body::Class(c) = self.expect(name, "class")? else {
            unreachable!()
        };
        let mut class = match c.class.as_str() {
            "explicit" => {
                let acts = c.members.iter().map(|m| self.act(m)).collect::<Result<Vec<_>, _>>()?;
                ActClass::explicit(acts, c.closure).map_err(|e| CliError::engine(name, e))?
            }
            "flat" => ActClass::of_kind(ActClassKind::FlatBounded(c.bound.unwrap_or(1))),
            "projective" => ActClass::of_kind(ActClassKind::ProjectiveBounded(c.bound.unwrap_or(1))),
            _ => ActClass::of_kind(ActClassKind::FpBounded(c.bound.unwrap_or(1))),
        };
        class.closure = c.closure;
        class.exact_projective = c.exact_projective;
        Ok(class)
    }

    pub fn universe_spec(&self, name: &str) -> Result<(FiniteMonoid, Side, usize), CliError> {
        let Body::UniverseSpec {
            monoid,
            side,
            max_act_size,
        } = self.expect(name, "universe-spec")?
        else {
            unreachable!()
        };
        Ok((self.monoid(monoid)?, *side, *max_act_size))
    }

    /// Validate every document, returning `(name, kind, outcome)`.
    pub fn check_all(&self) -> Vec<(String, &'static str, Result<(), CliError>)> {
        self.docs
            .iter()
            .map(|(name, d)| {
                let r = match &d.body {
                    Body::Monoid { .. } => self.monoid(name).map(drop),
                    Body::Act { .. } => self.act(name).map(drop),
                    Body::Map { .. } => self.map(name).map(drop),
                    Body::Square { .. } => self.square(name).and_then(|[f, g, u, v]| {
                        sacts::hom::Square::new(f, g, u, v)
                            .map(drop)
                            .map_err(|e| CliError::engine(name, e))
                    }),
                    Body::Class(_) => self.class(name).map(drop),
                    Body::UniverseSpec { .. } => self.universe_spec(name).map(drop),
                    Body::Job { .. } => Ok(()),
                };
                (name.clone(), d.body.kind(), r)
            })
            .collect()
    }
}

trait ReportExt {
    fn into_result_for(self, name: &str) -> Result<(), CliError>;
}

impl ReportExt for sacts::ValidationReport {
    fn into_result_for(self, name: &str) -> Result<(), CliError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(CliError::engine(name, sacts::Error::Laws(self)))
        }
    }
}

/// A document for an engine act, under the given names.
pub fn act_document(name: &str, monoid: &str, act: &Act) -> Document {
    Document {
        name: name.into(),
        body: Body::Act {
            monoid: monoid.into(),
            side: act.side(),
            action: act.table_rows(),
            centred: act.is_centred(),
        },
    }
}

pub fn monoid_document(name: &str, m: &FiniteMonoid) -> Document {
    Document {
        name: name.into(),
        body: Body::Monoid {
            identity: m.identity(),
            mul: m.table_rows(),
            zero: m.zero(),
        },
    }
}

pub fn map_document(name: &str, source: &str, target: &str, f: &ActMap) -> Document {
    Document {
        name: name.into(),
        body: Body::Map {
            source: source.into(),
            target: target.into(),
            values: f.values().to_vec(),
        },
    }
}
