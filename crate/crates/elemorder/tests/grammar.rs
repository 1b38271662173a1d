use elemorder::{parse_group, GroupExpr, Term};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = Term> {
    prop_oneof![
        (1u64..10_000).prop_map(Term::Cyclic),
        (2u64..500).prop_map(|k| Term::Dihedral(2 * k)),
        (2u64..500).prop_map(|k| Term::Dicyclic(4 * k)),
        (prop::sample::select(vec![2u64, 3, 5, 7, 11]), 1u32..6)
            .prop_map(|(p, k)| Term::ElemAbelian(p, k)),
        "[a-z0-9_/.]{1,12}".prop_map(Term::Table),
    ]
}

/// Random case and spacing that the grammar must ignore.
fn scramble(s: &str, seed: &[bool]) -> String {
    let mut out = String::new();
    let table_at = s.find("table:");
    for (i, c) in s.char_indices() {
        let in_path = table_at.is_some_and(|t| i >= t + 6) && !s[i..].contains(" x ");
        let flip = seed[i % seed.len()];
        if in_path {
            out.push(c);
        } else if c == ' ' {
            out.push_str(if flip { "  " } else { "\t " });
        } else if flip && c.is_ascii_alphabetic() {
            out.push(c.to_ascii_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

proptest! {
    #[test]
    fn display_then_parse_is_identity(terms in prop::collection::vec(term(), 1..5)) {
        let e = GroupExpr::new(terms).unwrap();
        let text = e.to_string();
        prop_assert_eq!(parse_group(&text).unwrap(), e);
    }

    #[test]
    fn case_and_spacing_do_not_matter(
        terms in prop::collection::vec(term().prop_filter("no paths", |t| !matches!(t, Term::Table(_))), 1..5),
        seed in prop::collection::vec(any::<bool>(), 1..8),
    ) {
        let e = GroupExpr::new(terms).unwrap();
        let noisy = scramble(&e.to_string(), &seed);
        prop_assert_eq!(parse_group(&noisy).unwrap(), e);
    }

    #[test]
    fn parser_never_panics(s in "\\PC{0,40}") {
        let _ = parse_group(&s);
    }
}
