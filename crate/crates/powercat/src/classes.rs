//! Command-line names for classes and objects.

use powercat_core::growth::Family;
use powercat_core::objects::{parse_object, DomainObject, ObjectKind};
use powercat_core::patterns::{parse_classical_list, parse_vincular_list, parse_word_list, ClassSpec};
use powercat_core::PathKind;

use crate::UsageError;

/// Resolves a class name. Accepted forms:
///
/// * a relation triple, `geq,geq,gt`
/// * word patterns, `avoid:100,110,210`
/// * vincular or classical permutation patterns, `perm:1-23-4` / `classical:123,132`
/// * a path kind (`dyck`, `vmdyck`, `steady`, `vmsteady`), or `trees`
/// * any growth family name (`cat`, `pcat:tree`, ...)
pub fn parse_class(name: &str) -> Result<ClassSpec, UsageError> {
    let bad = |e: &dyn std::fmt::Display| UsageError::Family(name.to_string(), e.to_string());
    if let Some(list) = name.strip_prefix("avoid:") {
        return parse_word_list(list).map(ClassSpec::InvSeqWords).map_err(|e| bad(&e));
    }
    if let Some(list) = name.strip_prefix("perm:") {
        return parse_vincular_list(list).map(ClassSpec::PermVincular).map_err(|e| bad(&e));
    }
    if let Some(list) = name.strip_prefix("classical:") {
        return parse_classical_list(list).map(ClassSpec::PermClassical).map_err(|e| bad(&e));
    }
    if let Some(kind) = path_kind(name) {
        return Ok(ClassSpec::Paths(kind));
    }
    if name == "trees" {
        return Ok(ClassSpec::Trees);
    }
    if let Ok(f) = name.parse::<Family>() {
        return Ok(f.class());
    }
    name.parse().map(ClassSpec::InvSeqTriple).map_err(|e| bad(&e))
}

fn path_kind(name: &str) -> Option<PathKind> {
    Some(match name {
        "dyck" => PathKind::Dyck,
        "vmdyck" => PathKind::ValleyMarkedDyck,
        "steady" => PathKind::Steady,
        "vmsteady" => PathKind::ValleyMarkedSteady,
        _ => return None,
    })
}

/// The text format of a family's objects.
pub fn object_kind(family: Family) -> ObjectKind {
    match family.class() {
        ClassSpec::InvSeqTriple(_) | ClassSpec::InvSeqWords(_) => ObjectKind::InversionSequence,
        ClassSpec::PermVincular(_) | ClassSpec::PermClassical(_) => ObjectKind::Permutation,
        ClassSpec::Paths(k) => ObjectKind::Path(k),
        ClassSpec::Trees => ObjectKind::Tree,
    }
}

pub fn parse_family_object(family: Family, text: &str) -> Result<DomainObject, UsageError> {
    let obj = parse_object(text, object_kind(family)).map_err(|e| UsageError::Input(e.to_string()))?;
    if !family.contains(&obj) {
        return Err(UsageError::Input(format!("{} is not in family {}", text, family)));
    }
    Ok(obj)
}
