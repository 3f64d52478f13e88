use proptest::prelude::*;
use scstar::search::{enumerate_up_to, Method};
use scstar_cli::document::{serialize_space, LabeledSpace, SpaceDocument};

fn labeled() -> impl Strategy<Value = LabeledSpace> {
    let spaces = enumerate_up_to(4, Method::Preorder).unwrap();
    (prop::sample::select(spaces), any::<bool>(), "[a-z]{1,3}").prop_map(|(space, named, stem)| {
        let labels = named.then(|| (0..space.size()).map(|p| format!("{stem}{p}")).collect());
        LabeledSpace { space, labels }
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(x in labeled()) {
        let text = serialize_space(&x);
        let back = LabeledSpace::parse(&text).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(serialize_space(&back), text);
    }

    #[test]
    fn open_order_and_duplicates_do_not_matter(x in labeled(), seed in any::<u64>()) {
        let mut doc: SpaceDocument = x.to_document();
        let k = doc.opens.len();
        doc.opens.rotate_left(seed as usize % k);
        doc.opens.push(doc.opens[0].clone());
        let text = serde_json::to_string(&doc).unwrap();
        prop_assert_eq!(LabeledSpace::parse(&text).unwrap(), x);
    }

    #[test]
    fn subset_specs_round_trip(x in labeled(), mask in any::<u32>()) {
        let a = scstar::PointSet::from_mask(mask & x.space.full_mask(), x.space.size()).unwrap();
        let rendered = x.render(&a);
        prop_assert_eq!(x.parse_subset(&rendered).unwrap(), a);
    }

    #[test]
    fn arbitrary_text_never_panics(text in ".{0,80}") {
        let _ = LabeledSpace::parse(&text);
    }
}
