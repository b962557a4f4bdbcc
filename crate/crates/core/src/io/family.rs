//! Family strings: `<variant>/<group>/<set>[/<sigma>]` for group-built graphs, and
//! `name:key=value,...` for the named constructions.

use crate::algebra::matrix;
use crate::algebra::{
    ambient_conjugation, frobenius_automorphism, matrix_conjugation_automorphism, negation, Group,
    GroupMap,
};
use crate::constructions::{lps_graph, paley, perm_apparatus, PaleyVariant, Sl2ClassData};
use crate::error::{Error, Result};
use crate::graph::{
    build_gabber_galil, build_variant, ConnectionMultiset, GgTwist, Variant, VariantGraph,
};
use std::collections::BTreeMap;

/// Parses an automorphism description: `id`, `neg`, `inv`, `frob`, `conj:<element>` or `mat:<matrix>`.
pub fn parse_sigma(group: &Group, s: &str) -> Result<GroupMap> {
    let s = s.trim();
    match s {
        "id" => Ok(GroupMap::identity(group)),
        "neg" | "inv" => negation(group),
        _ if s.starts_with("frob") => {
            let field = group
                .field()
                .ok_or_else(|| Error::Precondition(format!("{} has no field", group.label())))?;
            frobenius_automorphism(field)
        }
        _ => {
            if let Some(e) = s.strip_prefix("conj:") {
                ambient_conjugation(group, &group.parse_ambient(e)?)
            } else if let Some(m) = s.strip_prefix("mat:") {
                let f = group.field().ok_or_else(|| {
                    Error::Precondition(format!("{} is not a matrix group", group.label()))
                })?;
                matrix_conjugation_automorphism(group, &matrix::parse(f, m)?)
            } else {
                Err(Error::Parse(format!("unknown automorphism '{s}'")))
            }
        }
    }
}

/// A group with a connection multiset and an optional automorphism.
pub struct GroupInstance {
    pub group: Group,
    pub set: ConnectionMultiset,
    pub sigma: Option<GroupMap>,
}

/// Parses `<group>/<set>[/<sigma>]`.
pub fn parse_instance(s: &str) -> Result<GroupInstance> {
    let parts: Vec<&str> = s.splitn(3, '/').collect();
    if parts.len() < 2 {
        return Err(Error::Parse(format!(
            "instance '{s}' needs <group>/<set>[/<sigma>]"
        )));
    }
    let group = Group::parse(parts[0])?;
    let set = ConnectionMultiset::parse(&group, parts[1])?;
    let sigma = parts.get(2).map(|p| parse_sigma(&group, p)).transpose()?;
    Ok(GroupInstance { group, set, sigma })
}

fn key_values(name: &str, body: &str, allowed: &[&str]) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for item in body.split(',').filter(|t| !t.trim().is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("'{item}' in {name} family is not key=value")))?;
        let k = k.trim();
        if !allowed.contains(&k) {
            return Err(Error::Parse(format!("unknown key '{k}' for {name} family")));
        }
        if out.insert(k.to_string(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("duplicate key '{k}'")));
        }
    }
    Ok(out)
}

fn number<T: std::str::FromStr>(kv: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
    kv.get(key)
        .map(|v| {
            v.parse::<T>()
                .map_err(|_| Error::Parse(format!("{key}='{v}' is not a number")))
        })
        .transpose()
}

fn required<T: std::str::FromStr>(
    kv: &BTreeMap<String, String>,
    key: &str,
    name: &str,
) -> Result<T> {
    number(kv, key)?.ok_or_else(|| Error::Parse(format!("{name} family needs '{key}'")))
}

/// Builds the graph named by a family string.
pub fn resolve_family(s: &str) -> Result<VariantGraph> {
    let s = s.trim();
    if let Some((name, body)) = s.split_once(':').filter(|(_, b)| !b.contains('/')) {
        match name {
            "lps" => {
                let kv = key_values(name, body, &["p", "q", "sigma"])?;
                return lps_graph(
                    required(&kv, "p", name)?,
                    required(&kv, "q", name)?,
                    number(&kv, "sigma")?,
                );
            }
            "paley" => {
                let kv = key_values(name, body, &["q", "variant"])?;
                let v = kv
                    .get("variant")
                    .map(|v| PaleyVariant::parse(v))
                    .transpose()?;
                return paley(required(&kv, "q", name)?, v.unwrap_or(PaleyVariant::Graph));
            }
            "sl2class" => {
                let kv = key_values(name, body, &["q", "variant", "twist"])?;
                let twist: Option<usize> = number(&kv, "twist")?;
                let variant = match kv.get("variant") {
                    Some(v) => Variant::parse(v)?,
                    None if twist.is_some() => Variant::TwistedCayley,
                    None => Variant::CayleySum,
                };
                return Sl2ClassData::build(required(&kv, "q", name)?)?.graph(variant, twist);
            }
            "gg" => {
                let kv = key_values(name, body, &["n", "theta"])?;
                let theta = kv.get("theta").map(|t| GgTwist::parse(t)).transpose()?;
                return build_gabber_galil(required(&kv, "n", name)?, theta);
            }
            "perm" => {
                let kv = key_values(name, body, &["k", "n", "twist"])?;
                return perm_apparatus(required(&kv, "k", name)?, required(&kv, "n", name)?)?
                    .graph(number(&kv, "twist")?);
            }
            _ => {}
        }
    }
    let (variant, rest) = s
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("unrecognized family string '{s}'")))?;
    let variant = Variant::parse(variant)?;
    let inst = parse_instance(rest)?;
    if variant.is_twisted() && inst.sigma.is_none() {
        return Err(Error::Parse(format!(
            "twisted family '{s}' needs an automorphism"
        )));
    }
    build_variant(&inst.group, &inst.set, variant, inst.sigma.as_ref())
}
