//! JSON encodings of instances and results.
//!
//! Rationals are strings `"p/q"`; lattice vectors are arrays of integers
//! (numbers, or strings when they do not fit in 64 bits). Decoding errors
//! carry the JSON path of the offending value.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::arith::{fmt_rat, parse_rat, IVec, Int, RVec, Rat};
use crate::cohomology::{CycleWitness, ProjLine};
use crate::lattice::{Cone, LatticePolytope, WeightedFan};
use crate::matroid::{Matroid, Mci, SupportMultiset, Tci};
use crate::patchwork::RealMci;
use crate::pl::PLFunction;
use crate::{Error, Result};

#[derive(Clone)]
pub enum Instance {
    Mci(Mci),
    Rmci(RealMci),
    Tci(Tci),
    Fan(WeightedFan),
    Pair { t: WeightedFan, f: WeightedFan },
    Lines { l: Vec<ProjLine>, r: Vec<ProjLine> },
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Mci(_) => "mci",
            Instance::Rmci(_) => "rmci",
            Instance::Tci(_) => "tci",
            Instance::Fan(_) => "fan",
            Instance::Pair { .. } => "pair",
            Instance::Lines { .. } => "lines",
        }
    }

    /// Dimension of the ambient lattice.
    pub fn ambient(&self) -> usize {
        match self {
            Instance::Mci(m) => m.support().ambient(),
            Instance::Rmci(r) => r.ambient(),
            Instance::Tci(t) => t.ambient(),
            Instance::Fan(f) => f.ambient(),
            Instance::Pair { t, .. } => t.ambient(),
            Instance::Lines { .. } => 3,
        }
    }
}

#[derive(Clone)]
pub struct Loaded {
    pub instance: Instance,
    /// Free-form `"description"` of the file.
    pub metadata: Option<String>,
}

/// A JSON value together with its path, for diagnostics.
#[derive(Clone, Copy)]
pub struct At<'a> {
    v: &'a Value,
    path: &'a str,
}

pub(crate) fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

/// Runs `f` on a child value whose path is built on the fly.
fn child<T>(parent: &str, key: &str, v: &Value, f: impl FnOnce(At) -> Result<T>) -> Result<T> {
    let path = format!("{}{}", parent, key);
    f(At { v, path: &path })
}

impl<'a> At<'a> {
    pub fn root(v: &'a Value) -> At<'a> {
        At { v, path: "$" }
    }

    pub fn value(&self) -> &'a Value {
        self.v
    }

    pub fn path(&self) -> &str {
        self.path
    }

    pub fn has(&self, key: &str) -> bool {
        self.v.get(key).is_some()
    }

    pub fn field<T>(&self, key: &str, f: impl FnOnce(At) -> Result<T>) -> Result<T> {
        let v = self.v.get(key).ok_or_else(|| schema(self.path, format!("missing field \"{}\"", key)))?;
        child(self.path, &format!(".{}", key), v, f)
    }

    pub fn opt_field<T>(&self, key: &str, f: impl FnOnce(At) -> Result<T>) -> Result<Option<T>> {
        match self.v.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => child(self.path, &format!(".{}", key), v, f).map(Some),
        }
    }

    pub fn list<T>(&self, mut f: impl FnMut(At) -> Result<T>) -> Result<Vec<T>> {
        let a = self.v.as_array().ok_or_else(|| schema(self.path, "expected an array"))?;
        a.iter().enumerate().map(|(i, v)| child(self.path, &format!("[{}]", i), v, &mut f)).collect()
    }

    pub fn entries<T>(&self, mut f: impl FnMut(&str, At) -> Result<T>) -> Result<Vec<T>> {
        let o = self.v.as_object().ok_or_else(|| schema(self.path, "expected an object"))?;
        o.iter().map(|(k, v)| child(self.path, &format!(".{}", k), v, |a| f(k, a))).collect()
    }

    pub fn str(&self) -> Result<&'a str> {
        self.v.as_str().ok_or_else(|| schema(self.path, "expected a string"))
    }

    pub fn int(&self) -> Result<Int> {
        match self.v {
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Int::from(i))
                } else if let Some(u) = n.as_u64() {
                    Ok(Int::from(u))
                } else {
                    Err(schema(self.path, "expected an integer"))
                }
            }
            Value::String(s) => s.trim().parse::<Int>().map_err(|_| schema(self.path, format!("\"{}\" is not an integer", s))),
            _ => Err(schema(self.path, "expected an integer")),
        }
    }

    pub fn usize(&self) -> Result<usize> {
        self.int()?.to_usize().ok_or_else(|| schema(self.path, "expected a nonnegative integer"))
    }

    pub fn rat(&self) -> Result<Rat> {
        match self.v {
            Value::Number(_) => self.int().map(Rat::from_integer),
            Value::String(s) => parse_rat(s).ok_or_else(|| schema(self.path, format!("\"{}\" is not a rational p/q", s))),
            _ => Err(schema(self.path, "expected a rational \"p/q\"")),
        }
    }

    pub fn ivec(&self) -> Result<IVec> {
        self.list(|a| a.int())
    }

    pub fn rvec(&self) -> Result<RVec> {
        self.list(|a| a.rat())
    }
}

// ---------------------------------------------------------------- encoders

pub fn int_json(x: &Int) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => json!(x.to_string()),
    }
}

pub fn rat_json(x: &Rat) -> Value {
    json!(fmt_rat(x))
}

pub fn ivec_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn rvec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn cone_json(c: &Cone) -> Value {
    json!({
        "rays": c.rays().iter().map(|r| ivec_json(r)).collect::<Vec<_>>(),
        "lineality": c.lineality().iter().map(|r| ivec_json(r)).collect::<Vec<_>>(),
    })
}

pub fn fan_json(f: &WeightedFan) -> Value {
    let f = f.sorted();
    let cones: Vec<Value> = f
        .cones()
        .iter()
        .map(|(c, w)| {
            let mut o = cone_json(c);
            o["weight"] = rat_json(w);
            o
        })
        .collect();
    json!({ "ambient": f.ambient(), "dim": f.dim(), "cones": cones })
}

/// Polytopes are translated so that the lexicographically first vertex is
/// the origin.
pub fn polytope_json(p: &LatticePolytope) -> Value {
    let q = p.normalized();
    json!({ "ambient": q.ambient(), "vertices": q.vertices().iter().map(|v| ivec_json(v)).collect::<Vec<_>>() })
}

pub fn pl_json(m: &PLFunction) -> Value {
    let n = m.ambient();
    let (cones, covs) = m.to_explicit();
    let mut order: Vec<usize> = (0..cones.len()).collect();
    order.sort_by(|&a, &b| cones[a].cmp(&cones[b]));
    let fan = json!({
        "ambient": n,
        "dim": n,
        "cones": order.iter().map(|&i| { let mut o = cone_json(&cones[i]); o["weight"] = json!("1"); o }).collect::<Vec<_>>(),
    });
    json!({ "fan": fan, "linear": order.iter().map(|&i| rvec_json(&covs[i])).collect::<Vec<_>>() })
}

pub fn tci_json(t: &Tci) -> Value {
    json!({
        "kind": "tci",
        "ambient": t.ambient(),
        "codim": t.codim,
        "collapsed_at": t.collapsed_at,
        "fans": t.fans.iter().map(fan_json).collect::<Vec<_>>(),
        "functions": t.functions.iter().map(pl_json).collect::<Vec<_>>(),
    })
}

fn points_json(s: &SupportMultiset) -> Value {
    Value::Array(s.ids().iter().zip(s.points()).map(|(id, a)| json!({ "id": id, "a": ivec_json(a) })).collect())
}

fn matrix_json(rows: &[RVec]) -> Value {
    Value::Array(rows.iter().map(|r| rvec_json(r)).collect())
}

pub fn mci_json(m: &Mci) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), json!("mci"));
    o.insert("points".into(), points_json(m.support()));
    match m.matroid().vectors() {
        Some(cols) => {
            let k = cols.first().map_or(0, |c| c.len());
            let rows: Vec<RVec> = (0..k).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            o.insert("matrix".into(), matrix_json(&rows));
        }
        None => {
            let table = m.matroid().rank_table().unwrap_or_default();
            let t: Map<String, Value> = table
                .iter()
                .map(|(set, r)| (set.iter().cloned().collect::<Vec<_>>().join(","), json!(r)))
                .collect();
            o.insert("rank_table".into(), Value::Object(t));
        }
    }
    o.insert("codim".into(), json!(m.codim()));
    Value::Object(o)
}

pub fn rmci_json(r: &RealMci) -> Value {
    json!({
        "kind": "rmci",
        "points": points_json(&r.support),
        "matrix": matrix_json(&r.matrix),
        "sign": r.sign.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<Map<_, _>>(),
        "order": r.order.iter().map(|(k, v)| (k.clone(), rat_json(v))).collect::<Map<_, _>>(),
    })
}

fn line_json(l: &ProjLine) -> Value {
    json!([rvec_json(&l.p), rvec_json(&l.q)])
}

pub fn instance_json(inst: &Instance, metadata: Option<&str>) -> Value {
    let mut v = match inst {
        Instance::Mci(m) => mci_json(m),
        Instance::Rmci(r) => rmci_json(r),
        Instance::Tci(t) => tci_json(t),
        Instance::Fan(f) => {
            let mut v = fan_json(f);
            v["kind"] = json!("fan");
            v
        }
        Instance::Pair { t, f } => json!({ "kind": "pair", "t": fan_json(t), "f": fan_json(f) }),
        Instance::Lines { l, r } => json!({
            "kind": "lines",
            "l": l.iter().map(line_json).collect::<Vec<_>>(),
            "r": r.iter().map(line_json).collect::<Vec<_>>(),
        }),
    };
    if let Some(d) = metadata {
        v["description"] = json!(d);
    }
    v
}

// ---------------------------------------------------------------- decoders

pub fn parse_cone(a: At, ambient: Option<usize>) -> Result<Cone> {
    let rays = a.opt_field("rays", |x| x.list(|r| r.ivec()))?.unwrap_or_default();
    let lin = a.opt_field("lineality", |x| x.list(|r| r.ivec()))?.unwrap_or_default();
    let n = match ambient.or_else(|| rays.iter().chain(&lin).next().map(|r| r.len())) {
        Some(n) => n,
        None => return Err(schema(a.path(), "cannot infer the ambient dimension of a cone without generators")),
    };
    if let Some(bad) = rays.iter().chain(&lin).find(|r| r.len() != n) {
        return Err(Error::DimMismatch { expected: n, got: bad.len() });
    }
    Ok(Cone::from_generators(n, &rays, &lin))
}

pub fn parse_fan(a: At) -> Result<WeightedFan> {
    let ambient = a.opt_field("ambient", |x| x.usize())?;
    let cones = a.field("cones", |x| {
        x.list(|c| {
            let cone = parse_cone(c, ambient)?;
            let w = c.opt_field("weight", |w| w.rat())?.unwrap_or_else(|| Rat::from_integer(1.into()));
            Ok((cone, w))
        })
    })?;
    let n = match ambient.or_else(|| cones.first().map(|(c, _)| c.ambient())) {
        Some(n) => n,
        None => return Err(schema(a.path(), "an empty fan needs \"ambient\"")),
    };
    let dim = match a.opt_field("dim", |x| x.usize())? {
        Some(d) => d,
        None => cones.first().map(|(c, _)| c.dim()).ok_or_else(|| schema(a.path(), "an empty fan needs \"dim\""))?,
    };
    WeightedFan::new(n, dim, cones)
}

pub fn parse_polytope(a: At) -> Result<LatticePolytope> {
    let vs = a.field("vertices", |x| x.list(|v| v.ivec()))?;
    let n = a.opt_field("ambient", |x| x.usize())?.or_else(|| vs.first().map(|v| v.len())).unwrap_or(0);
    LatticePolytope::hull(n, &vs)
}

/// An explicit PL function `{fan, linear}`, or the support function
/// `{support, minus?}` of a (virtual) polytope.
pub fn parse_pl(a: At) -> Result<PLFunction> {
    if a.has("support") {
        let h = PLFunction::support_function(&a.field("support", parse_polytope)?);
        return Ok(match a.opt_field("minus", parse_polytope)? {
            Some(q) => h.sub(&PLFunction::support_function(&q)),
            None => h,
        });
    }
    let fan = a.field("fan", |f| {
        let ambient = f.opt_field("ambient", |x| x.usize())?;
        f.field("cones", |x| x.list(|c| parse_cone(c, ambient)))
    })?;
    let linear = a.field("linear", |x| x.list(|c| c.rvec()))?;
    let n = fan.first().map(|c| c.ambient()).ok_or_else(|| schema(a.path(), "empty fan"))?;
    if fan.len() != linear.len() {
        return Err(schema(a.path(), format!("{} cones but {} covectors", fan.len(), linear.len())));
    }
    PLFunction::explicit(n, fan, linear)
}

pub fn parse_tci(a: At) -> Result<Tci> {
    let fans = a.field("fans", |x| x.list(parse_fan))?;
    let functions = a.field("functions", |x| x.list(parse_pl))?;
    if fans.len() != functions.len() + 1 {
        return Err(schema(a.path(), format!("{} fans for {} functions", fans.len(), functions.len())));
    }
    let n = fans[0].ambient();
    if let Some(f) = fans.iter().find(|f| f.ambient() != n) {
        return Err(Error::DimMismatch { expected: n, got: f.ambient() });
    }
    let codim = a.opt_field("codim", |x| x.usize())?.unwrap_or(functions.len());
    let collapsed_at = (1..fans.len()).find(|&i| fans[i].is_empty() && i < codim);
    let t = Tci { fans, functions, codim, collapsed_at };
    if !t.verify()? {
        return Err(schema(a.path(), "invariant CornerLocus: the fans are not the successive corner loci"));
    }
    Ok(t)
}

fn parse_points(a: At) -> Result<SupportMultiset> {
    let entries = a.field("points", |x| x.list(|p| Ok((p.field("id", |i| i.str().map(String::from))?, p.field("a", |v| v.ivec())?))))?;
    SupportMultiset::new(entries)
}

pub fn parse_mci(a: At) -> Result<Mci> {
    let support = parse_points(a)?;
    let ground = support.ids().to_vec();
    let matroid = if a.has("matrix") {
        let rows = a.field("matrix", |x| x.list(|r| r.rvec()))?;
        Matroid::from_matrix(ground, &rows)?
    } else if a.has("rank_table") {
        let table = a.field("rank_table", |x| {
            x.entries(|k, v| {
                let key = k.trim().trim_start_matches('{').trim_end_matches('}');
                let set: BTreeSet<String> = key.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                Ok((set, v.usize()?))
            })
        })?;
        Matroid::from_rank_table(ground, &table.into_iter().collect::<BTreeMap<_, _>>())?
    } else {
        return Err(schema(a.path(), "an MCI needs \"matrix\" or \"rank_table\""));
    };
    let codim = a.field("codim", |x| x.usize())?;
    Mci::new(support, matroid, codim)
}

pub fn parse_rmci(a: At) -> Result<RealMci> {
    let support = parse_points(a)?;
    let matrix = a.field("matrix", |x| x.list(|r| r.rvec()))?;
    let sign = a.field("sign", |x| {
        x.entries(|k, v| {
            let s = v.int()?.to_i8().filter(|s| *s == 1 || *s == -1).ok_or_else(|| schema(v.path(), "sign must be 1 or -1"))?;
            Ok((k.to_string(), s))
        })
    })?;
    let order = a.field("order", |x| x.entries(|k, v| Ok((k.to_string(), v.rat()?))))?;
    RealMci::new(support, matrix, sign.into_iter().collect(), order.into_iter().collect())
}

pub fn parse_lines(a: At) -> Result<Vec<ProjLine>> {
    a.list(|l| {
        let pts = l.list(|p| p.rvec())?;
        if pts.len() != 2 {
            return Err(schema(l.path(), "a line is given by two points"));
        }
        let mut it = pts.into_iter();
        ProjLine::new(it.next().unwrap(), it.next().unwrap())
    })
}

/// A cycle given by a base fan and PL factors, `{"base": fan, "factors": [pl]}`.
pub fn parse_witness(a: At) -> Result<CycleWitness> {
    let base = a.field("base", parse_fan)?;
    let factors = a.opt_field("factors", |x| x.list(parse_pl))?.unwrap_or_default();
    Ok(CycleWitness::new(base, factors))
}

fn infer_kind(a: At) -> Result<String> {
    if let Some(k) = a.opt_field("kind", |x| x.str().map(String::from))? {
        return Ok(k);
    }
    let has = |k: &str| a.has(k);
    Ok(if has("points") && has("sign") {
        "rmci"
    } else if has("points") {
        "mci"
    } else if has("fans") {
        "tci"
    } else if has("cones") {
        "fan"
    } else if has("t") && has("f") {
        "pair"
    } else if has("l") && has("r") {
        "lines"
    } else {
        return Err(schema("$", "cannot tell the instance kind; add \"kind\""));
    }
    .to_string())
}

pub fn parse_value(v: &Value) -> Result<Loaded> {
    let a = At::root(v);
    let instance = match infer_kind(a)?.as_str() {
        "mci" => Instance::Mci(parse_mci(a)?),
        "rmci" => Instance::Rmci(parse_rmci(a)?),
        "tci" => Instance::Tci(parse_tci(a)?),
        "fan" => Instance::Fan(parse_fan(a)?),
        "pair" => Instance::Pair { t: a.field("t", parse_fan)?, f: a.field("f", parse_fan)? },
        "lines" => Instance::Lines { l: a.field("l", parse_lines)?, r: a.field("r", parse_lines)? },
        k => return Err(schema("$.kind", format!("unknown kind \"{}\"", k))),
    };
    let metadata = a.opt_field("description", |x| x.str().map(String::from))?;
    Ok(Loaded { instance, metadata })
}

pub fn parse_str(text: &str) -> Result<Loaded> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema("$", format!("invalid JSON: {}", e)))?;
    parse_value(&v)
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| schema("$", format!("{}: invalid JSON: {}", path.display(), e)))
}

pub fn parse_instance(path: &Path) -> Result<Loaded> {
    parse_value(&read_json(path)?)
}

/// Stable pretty-printing with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ivec, rat};

    fn hexagon_mci_text() -> &'static str {
        r#"{
          "description": "three binomials on alternate hexagon edges",
          "points": [
            {"id": "r0", "a": [0, 0]}, {"id": "r1", "a": [1, 0]},
            {"id": "g0", "a": [1, 0]}, {"id": "g1", "a": [2, 1]},
            {"id": "b0", "a": [2, 1]}, {"id": "b1", "a": [2, 2]}
          ],
          "matrix": [["1", "1", "1", "1", "1", "1"], ["1", "1", "2", "2", "3", "3"]],
          "codim": 2
        }"#
    }

    #[test]
    fn minimal_mci_loads() {
        let l = parse_str(hexagon_mci_text()).unwrap();
        assert_eq!(l.instance.kind(), "mci");
        assert_eq!(l.metadata.as_deref(), Some("three binomials on alternate hexagon edges"));
        let Instance::Mci(m) = &l.instance else { panic!() };
        assert_eq!(m.support().len(), 6);
        assert_eq!(m.matroid().full_rank(), 2);
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let text = r#"{"points": [{"id": "x", "a": [0]}, {"id": "x", "a": [1]}], "matrix": [[1, 1]], "codim": 1}"#;
        assert!(matches!(parse_str(text).err(), Some(Error::DuplicateId(id)) if id == "x"));
    }

    #[test]
    fn overlapping_cones_are_not_a_fan() {
        let text = r#"{"kind": "fan", "dim": 2, "cones": [
            {"rays": [[1, 0], [0, 1]], "weight": 1},
            {"rays": [[1, 1], [-1, 1]], "weight": 1}]}"#;
        assert!(matches!(parse_str(text).err(), Some(Error::NotAFan(_))));
    }

    #[test]
    fn schema_errors_name_the_path() {
        let text = r#"{"points": [{"id": "x", "a": [0, "q"]}], "matrix": [[1]], "codim": 1}"#;
        match parse_str(text).err() {
            Some(Error::Schema { path, .. }) => assert_eq!(path, "$.points[0].a[1]"),
            e => panic!("{:?}", e),
        }
    }

    #[test]
    fn rationals_are_strings() {
        assert_eq!(rat_json(&rat(-3, 6)), json!("-1/2"));
        assert_eq!(rat_json(&rat(4, 2)), json!("2"));
        let big = Int::from(u64::MAX) * Int::from(10);
        assert_eq!(int_json(&big), json!(big.to_string()));
        assert_eq!(At::root(&int_json(&big)).int().unwrap(), big);
    }

    #[test]
    fn rank_tables_round_trip() {
        let text = r#"{"points": [{"id": "p", "a": [0]}, {"id": "q", "a": [1]}],
            "rank_table": {"p": 1, "q": 1, "p,q": 1}, "codim": 1}"#;
        let l = parse_str(text).unwrap();
        let v = instance_json(&l.instance, None);
        assert_eq!(v["rank_table"]["p,q"], json!(1));
        let again = parse_value(&v).unwrap();
        assert_eq!(instance_json(&again.instance, None), v);
    }

    #[test]
    fn mci_and_tci_round_trip() {
        let l = parse_str(hexagon_mci_text()).unwrap();
        let v = instance_json(&l.instance, l.metadata.as_deref());
        assert_eq!(instance_json(&parse_value(&v).unwrap().instance, l.metadata.as_deref()), v);
        let Instance::Mci(m) = &l.instance else { panic!() };
        let t = crate::matroid::tci_from_mci(m).unwrap();
        let tv = tci_json(&t);
        let back = parse_value(&tv).unwrap();
        assert_eq!(back.instance.kind(), "tci");
        assert_eq!(instance_json(&back.instance, None), tv);
    }

    #[test]
    fn tci_files_are_checked() {
        let l = parse_str(hexagon_mci_text()).unwrap();
        let Instance::Mci(m) = &l.instance else { panic!() };
        let mut tv = tci_json(&crate::matroid::tci_from_mci(m).unwrap());
        tv["fans"][2]["cones"][0]["weight"] = json!("7");
        assert!(matches!(parse_value(&tv).err(), Some(Error::Schema { .. })));
    }

    #[test]
    fn lines_and_pairs_round_trip() {
        let text = r#"{"l": [[[0, 0, 0], [1, 0, 0]]], "r": [[["0", "0", "0", "1"], ["0", "1", "0", "1/2"]]]}"#;
        let l = parse_str(text).unwrap();
        assert_eq!(l.instance.kind(), "lines");
        let v = instance_json(&l.instance, None);
        assert_eq!(instance_json(&parse_value(&v).unwrap().instance, None), v);
        let plane = |a: [i64; 4], b: [i64; 4]| {
            WeightedFan::from_cones(4, 2, vec![(Cone::from_generators(4, &[], &[ivec(&a), ivec(&b)]), rat(1, 1))])
        };
        let p = Instance::Pair { t: plane([1, 0, 0, 0], [0, 1, 0, 0]), f: plane([0, 0, 1, 0], [0, 0, 0, 1]) };
        let v = instance_json(&p, Some("two planes"));
        let back = parse_value(&v).unwrap();
        assert_eq!(back.metadata.as_deref(), Some("two planes"));
        assert_eq!(instance_json(&back.instance, Some("two planes")), v);
    }

    #[test]
    fn real_mci_round_trip() {
        let text = r#"{"points": [{"id": "a", "a": [0]}, {"id": "b", "a": [1]}, {"id": "c", "a": [2]}],
            "matrix": [[1, 1, 1]], "sign": {"a": 1, "b": -1, "c": 1}, "order": {"a": "0", "b": "3/2", "c": "1"}}"#;
        let l = parse_str(text).unwrap();
        assert_eq!(l.instance.kind(), "rmci");
        let v = instance_json(&l.instance, None);
        assert_eq!(v["order"]["b"], json!("3/2"));
        assert_eq!(instance_json(&parse_value(&v).unwrap().instance, None), v);
        let bad = text.replace("\"b\": -1", "\"b\": 2");
        assert!(matches!(parse_str(&bad).err(), Some(Error::Schema { .. })));
    }

    #[test]
    fn polytopes_are_normalized() {
        let p = LatticePolytope::hull(2, &[ivec(&[3, 4]), ivec(&[4, 4]), ivec(&[3, 5])]).unwrap();
        assert_eq!(polytope_json(&p)["vertices"], json!([[0, 0], [0, 1], [1, 0]]));
        assert_eq!(parse_polytope(At::root(&polytope_json(&p))).unwrap(), p.normalized());
    }

    #[test]
    fn support_function_shorthand() {
        let v = json!({"support": {"vertices": [[0, 0], [2, 0], [0, 1]]}, "minus": {"vertices": [[0, 0], [1, 0]]}});
        let m = parse_pl(At::root(&v)).unwrap();
        assert_eq!(m.value(&[rat(1, 1), rat(0, 1)]), rat(1, 1));
        assert_eq!(m.value(&[rat(0, 1), rat(1, 1)]), rat(1, 1));
        assert_eq!(instance_json(&Instance::Fan(WeightedFan::whole_space(2)), None)["kind"], json!("fan"));
    }
}
