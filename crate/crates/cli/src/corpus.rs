//! Built-in example configurations.

const CORPUS: &[(&str, &str)] = &[
    ("running-pair", include_str!("../corpus/running-pair.toml")),
    ("legendre", include_str!("../corpus/legendre.toml")),
    ("constant-pair", include_str!("../corpus/constant-pair.toml")),
    ("ar-pair", include_str!("../corpus/ar-pair.toml")),
];

pub fn names() -> Vec<&'static str> {
    CORPUS.iter().map(|(n, _)| *n).collect()
}

pub fn get(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
