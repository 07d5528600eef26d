//! Built-in catalogs, compiled into the binary.

use crate::error::{Error, Result};

pub const CATALOGS: &[(&str, &str)] = &[
    ("dual-numbers", include_str!("../../data/dual-numbers.gv")),
    ("f5-c2", include_str!("../../data/f5-c2.gv")),
    ("q-c3", include_str!("../../data/q-c3.gv")),
    ("t2", include_str!("../../data/t2.gv")),
    ("f5-c3", include_str!("../../data/f5-c3.gv")),
    ("vect", include_str!("../../data/vect.gv")),
    ("c2-f5", include_str!("../../data/c2-f5.gv")),
    ("c3-f7", include_str!("../../data/c3-f7.gv")),
    ("s3-q", include_str!("../../data/s3-q.gv")),
    ("q8-f5", include_str!("../../data/q8-f5.gv")),
];

pub fn names() -> Vec<&'static str> {
    CATALOGS.iter().map(|(n, _)| *n).collect()
}

pub fn source(name: &str) -> Result<&'static str> {
    CATALOGS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::Usage(format!("unknown catalog {name}; known: {}", names().join(", "))))
}
