//! Shipped action configurations.

use crate::config::{load_action, LoadedAction};
use crate::{Error, Result};

/// `(name, JSON text)` for every preset.
pub const PRESETS: &[(&str, &str)] = &[
    ("sl2-z5", include_str!("../presets/sl2-z5.json")),
    ("trivial-sl2", include_str!("../presets/trivial-sl2.json")),
    ("sl3-d6-a", include_str!("../presets/sl3-d6-a.json")),
    ("sl3-d6-b", include_str!("../presets/sl3-d6-b.json")),
    ("sl3-d6-c", include_str!("../presets/sl3-d6-c.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Result<&'static str> {
    PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| {
            Error::Config(format!(
                "unknown preset {name:?}; known: {}",
                names().collect::<Vec<_>>().join(", ")
            ))
        })
}

pub fn load(name: &str) -> Result<LoadedAction> {
    load_action(text(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_load() {
        let orders: Vec<usize> = names().map(|n| load(n).unwrap().action.order()).collect();
        assert_eq!(orders, vec![5, 1, 12, 12, 12]);
    }

    #[test]
    fn stabiliser_orders() {
        for (name, nu) in [
            ("sl2-z5", 5),
            ("trivial-sl2", 1),
            ("sl3-d6-a", 6),
            ("sl3-d6-b", 2),
            ("sl3-d6-c", 2),
        ] {
            let l = load(name).unwrap();
            let st = l.action.stabilizer(l.point.as_ref().unwrap()).unwrap();
            assert_eq!(st.order, nu, "{name}");
        }
    }
}
