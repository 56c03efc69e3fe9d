//! Worked examples, each checked against an independent computation.

use std::collections::{BTreeSet, HashMap};

use ocycle_core::builders::{
    difference_class_cycles, ocycle_af, ocycle_any, ocycle_double_plus_one, ocycle_double_plus_seven, ocycle_product,
    OcycleCertificate,
};
use ocycle_core::constructions::{
    base_case, bose, direct_product, double_plus_one, double_plus_seven, skolem, skolem_pi, Fano7Seed,
};
use ocycle_core::design::{validate_sts, LabelScheme, Origin, Point, Triple, TripleSystem};
use ocycle_core::ocycle::{
    compress, cut_between, decompress, merge_all, validate_ocycle, CompressedCycle, OrientedBlock, OverlapCycle,
    PathEnd,
};
use ocycle_core::verify::{exhaustive_ocycle_search, is_af, AfVerdict, DEFAULT_BUDGET, DEFAULT_SEARCH_LIMIT};
use ocycle_core::Error;

const FANO: [[u32; 3]; 7] = [
    [0, 1, 2],
    [0, 3, 4],
    [2, 4, 5],
    [0, 5, 6],
    [1, 4, 6],
    [1, 3, 5],
    [2, 3, 6],
];

fn triples(blocks: &[[u32; 3]]) -> Vec<Triple> {
    blocks
        .iter()
        .map(|&[a, b, c]| Triple::from_labels(a, b, c).unwrap())
        .collect()
}

fn t(a: u32, b: u32, c: u32) -> Triple {
    Triple::from_labels(a, b, c).unwrap()
}

fn ob(h: u32, x: u32, tl: u32) -> OrientedBlock {
    OrientedBlock::from_labels(h, x, tl).unwrap()
}

fn step<'a>(c: &'a OcycleCertificate, prefix: &str) -> &'a [Triple] {
    &c.steps
        .iter()
        .find(|s| s.name.starts_with(prefix))
        .expect(prefix)
        .blocks
}

#[test]
fn triple_system_construction() {
    let fano = TripleSystem::new(7, triples(&FANO)).unwrap();
    assert_eq!(fano.block_count(), 7);
    assert_eq!(TripleSystem::new(3, triples(&[[0, 1, 2]])).unwrap().block_count(), 1);

    let mut doubled = FANO.to_vec();
    doubled[1] = [0, 1, 3];
    let Err(Error::InvalidDesign(report)) = TripleSystem::new(7, triples(&doubled)) else {
        panic!("pair {{0,1}} twice must be rejected");
    };
    assert!(report.to_string().contains("pair {0,1} covered twice"), "{report}");
}

#[test]
fn third_point_lookup() {
    let fano = TripleSystem::new(7, triples(&FANO)).unwrap();
    assert_eq!(fano.block_of_pair(Point(2), Point(0)).unwrap(), t(0, 1, 2));
    assert_eq!(
        TripleSystem::trivial().block_of_pair(Point(0), Point(2)).unwrap(),
        t(0, 1, 2)
    );

    // Every pair of Bose(3), against a linear scan of the block list.
    let ts = bose(3).unwrap();
    let mut hits: HashMap<Triple, usize> = HashMap::new();
    for p in 0..9 {
        for q in 0..9 {
            if p == q {
                continue;
            }
            let scan: Vec<&Triple> = ts
                .blocks()
                .iter()
                .filter(|b| b.contains(Point(p)) && b.contains(Point(q)))
                .collect();
            assert_eq!(scan.len(), 1);
            let got = ts.block_of_pair(Point(p), Point(q)).unwrap();
            assert_eq!(&got, scan[0]);
            if p < q {
                *hits.entry(got).or_default() += 1;
            }
        }
    }
    assert_eq!(hits.len(), 12);
    assert!(hits.values().all(|&n| n == 3));
}

#[test]
fn sts_validation_reports() {
    let ts = bose(3).unwrap();
    let r = validate_sts(9, ts.blocks());
    assert!(r.is_clean() && r.defects.is_empty());
    assert_eq!(r.block_count, 12);

    let r = validate_sts(7, &triples(&FANO[1..]));
    assert_eq!(r.uncovered_pairs, 3);
    assert_eq!(r.block_count, 6);
    assert!(r.summary().contains("3 uncovered pairs"), "{}", r.summary());
    assert!(r.summary().contains("block count 6 \u{2260} 7"), "{}", r.summary());
    assert!(validate_sts(19, base_case(19).unwrap().parsed_sts.blocks()).is_clean());
}

#[test]
fn label_schemes_are_bijections() {
    let schemes = [
        LabelScheme::DoublePlusOne { base: 7 },
        LabelScheme::DoublePlusSeven { base: 15 },
        LabelScheme::Bose { m: 5 },
        LabelScheme::Skolem { t: 2 },
        LabelScheme::Product { u: 7, w: 9 },
        LabelScheme::Tabulated { m: 9, infinities: 3 },
    ];
    for s in schemes {
        let origins = s.origins();
        assert_eq!(origins.len() as u32, s.order(), "{s}");
        let labels: BTreeSet<u32> = origins.iter().map(|&o| s.label(o).unwrap().0).collect();
        assert_eq!(labels, (0..s.order()).collect(), "{s}");
        for o in origins {
            assert_eq!(s.origin(s.label(o).unwrap()).unwrap(), o, "{s} {o}");
        }
    }
    let p = |coset, residue| Origin::Pair { coset, residue };
    let s = LabelScheme::DoublePlusOne { base: 7 };
    assert_eq!(
        [s.label(p(0, 3)), s.label(p(1, 3)), s.label(Origin::Infinity(0))].map(|l| l.unwrap().0),
        [3, 10, 14]
    );
    let s = LabelScheme::DoublePlusSeven { base: 15 };
    assert_eq!(s.label(Origin::Infinity(-3)).unwrap().0, 30);
    assert_eq!(s.label(Origin::Infinity(3)).unwrap().0, 36);
    assert!(s.label(Origin::Infinity(4)).is_err());
}

#[test]
fn bose_blocks() {
    let ts = bose(3).unwrap();
    for i in 0..3 {
        assert!(ts.contains(&t(i, 3 + i, 6 + i)));
    }
    assert!(validate_sts(15, bose(5).unwrap().blocks()).is_clean());
    assert_eq!(bose(5).unwrap().block_count(), 35);
}

#[test]
fn skolem_blocks() {
    assert_eq!([0, 1, 2, 3].map(|z| skolem_pi(z, 2)), [0, 2, 1, 3]);
    assert_eq!(skolem(1).unwrap().block_count(), 7);
    let ts = skolem(2).unwrap();
    assert_eq!(ts.block_count(), 26);
    assert!(validate_sts(13, ts.blocks()).is_clean());
}

#[test]
fn product_blocks() {
    let three = TripleSystem::trivial();
    assert_eq!(direct_product(&three, &three).unwrap().block_count(), 12);
    let p = direct_product(&skolem(1).unwrap(), &bose(3).unwrap()).unwrap();
    assert_eq!(p.block_count(), 651);
    assert!(validate_sts(63, p.blocks()).is_clean());
}

#[test]
fn doubling_blocks() {
    let ts = double_plus_one(&skolem(1).unwrap()).unwrap();
    assert_eq!(ts.block_count(), 35);
    // inv2 mod 7 = 4, so x=0, y=1 hides (1, 4).
    assert!(ts.contains(&t(0, 1, 7 + 4)));
    let base = base_case(15).unwrap().parsed_sts;
    let ts = double_plus_one(&base).unwrap();
    assert_eq!(ts.block_count(), 155);
    assert!(validate_sts(31, ts.blocks()).is_clean());

    let seed = Fano7Seed::standard().unwrap();
    let ts = double_plus_seven(&base, &seed).unwrap();
    assert_eq!(ts.block_count(), 222);
    for x in 0..15 {
        assert!(ts.contains(&t(x, (x + 2) % 15, (x + 6) % 15)), "x={x}");
    }
    let ts = double_plus_seven(&base_case(19).unwrap().parsed_sts, &seed).unwrap();
    assert_eq!(ts.block_count(), 330);
    assert!(validate_sts(45, ts.blocks()).is_clean());
}

#[test]
fn base_case_shapes() {
    let c7 = base_case(7).unwrap();
    assert_eq!(
        compress(&c7.cycle().unwrap()).points(),
        [2, 0, 4, 5, 6, 1, 3].map(Point)
    );
    assert_eq!(c7.parsed_blocks[0], ob(2, 1, 0));
    assert_eq!(compress(&base_case(9).unwrap().cycle().unwrap()).len(), 12);
    let c15 = base_case(15).unwrap();
    assert_eq!(c15.parsed_blocks.len(), 35);
    assert!(c15.parsed_blocks.iter().any(|b| b.head.0 >= 10 || b.tail.0 >= 10));
    for v in [7, 9, 13, 15, 19, 21, 25, 27, 33] {
        let a = base_case(v).unwrap();
        let c = a.cycle().unwrap();
        assert_eq!(decompress(&a.parsed_sts, &compress(&c)).unwrap(), c, "v={v}");
    }
}

#[test]
fn ocycle_validation() {
    let a = base_case(7).unwrap();
    let blocks = a.parsed_blocks.clone();
    assert!(validate_ocycle(&a.parsed_sts, &blocks).is_clean());
    let r = validate_ocycle(&a.parsed_sts, &blocks[1..]);
    assert_eq!(r.covered_blocks, 6);
    assert!(r.to_string().contains("coverage: 6 of 7 blocks"), "{r}");
    // A swap breaks the junction before, between and after the pair.
    let mut swapped = blocks.clone();
    swapped.swap(2, 3);
    assert_eq!(validate_ocycle(&a.parsed_sts, &swapped).chaining_violations, 3);
}

#[test]
fn cut_and_reorient() {
    let c = base_case(7).unwrap().cycle().unwrap();
    for i in 0..7 {
        let path = cut_between(&c, i).unwrap();
        assert_eq!(path.len(), 7);
        assert_eq!(path.start(), c.blocks()[i].tail);
        assert_eq!(path.clone().close().unwrap(), c.rotated((i + 1) % 7));
        let flipped = path.clone().reorient_end(PathEnd::Last).unwrap();
        let last = *path.blocks().last().unwrap();
        assert_eq!(
            *flipped.blocks().last().unwrap(),
            ob(last.head.0, last.tail.0, last.hidden.0)
        );
        assert_eq!(flipped.reorient_end(PathEnd::Last).unwrap(), path);
    }
}

#[test]
fn merging() {
    let c = base_case(7).unwrap().cycle().unwrap();
    assert_eq!(merge_all(vec![c.clone()]), vec![c]);
    let a = OverlapCycle::new(vec![ob(0, 1, 2), ob(2, 3, 4), ob(4, 5, 0)]).unwrap();
    let b = OverlapCycle::new(vec![ob(6, 7, 8), ob(8, 9, 10), ob(10, 11, 6)]).unwrap();
    assert_eq!(merge_all(vec![a.clone(), b.clone()]).len(), 2);
}

#[test]
fn decompress_rejects_repeats() {
    let ts = base_case(7).unwrap().parsed_sts;
    let err = decompress(&ts, &CompressedCycle::from_labels(&[0, 0, 1, 2, 3, 4, 5])).unwrap_err();
    assert!(err.to_string().contains("repeated consecutive point"), "{err}");
    // (0,1) and (1,0) name the same block.
    let err = decompress(&ts, &CompressedCycle::from_labels(&[0, 1, 0, 2, 3, 4, 5])).unwrap_err();
    assert!(err.to_string().contains("repeats block 0"), "{err}");
}

fn class_template(modulus: u32, d: u32) -> impl Fn(u32) -> ocycle_core::Result<OrientedBlock> {
    move |x| OrientedBlock::from_labels(x, modulus + x, (x + d) % modulus)
}

#[test]
fn difference_classes() {
    let one = difference_class_cycles(7, 1, class_template(7, 1)).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(compress(&one[0]).points(), (0..7).map(Point).collect::<Vec<_>>());
    let three = difference_class_cycles(9, 3, class_template(9, 3)).unwrap();
    assert_eq!(three.iter().map(OverlapCycle::len).collect::<Vec<_>>(), [3, 3, 3]);
    let five = difference_class_cycles(15, 5, class_template(15, 5)).unwrap();
    assert_eq!(five.len(), 5);
    let heads: BTreeSet<u32> = five.iter().flat_map(|c| c.blocks().iter().map(|b| b.head.0)).collect();
    assert_eq!(heads, (0..15).collect());
    assert!(difference_class_cycles(15, 8, class_template(15, 8)).is_err());
}

#[test]
fn doubling_steps() {
    let base = OcycleCertificate::from_base_case(&base_case(15).unwrap()).unwrap();
    let c = ocycle_double_plus_one(&base).unwrap();
    assert_eq!((c.order(), c.block_count(), c.cycle.len()), (31, 155, 155));
    assert_eq!(step(&c, "step 1").len(), 35);
    // 15 * 14 / 2 mixed blocks, less the 15 of difference 2 kept for step 3.
    assert_eq!(step(&c, "step 2").len(), 105 - 15);
    assert_eq!(step(&c, "step 3").len(), 2 * 15);

    let c = ocycle_double_plus_seven(&base).unwrap();
    assert_eq!((c.order(), c.block_count(), c.cycle.len()), (37, 222, 222));
    assert_eq!(step(&c, "step 4").len(), 30);
    // Step 6 holds the six other infinite points, v blocks each.
    assert_eq!(step(&c, "step 6").len(), 6 * 15);
}

#[test]
fn product_of_full_overlap_cycles_needs_no_fallback() {
    let seven = ocycle_any(7).unwrap();
    let heads: BTreeSet<u32> = seven.cycle.blocks().iter().map(|b| b.head.0).collect();
    assert_eq!(heads.len(), 7);
    let (c, stats) = ocycle_product(&seven, &seven).unwrap();
    assert_eq!(c.block_count(), 49 * 48 / 6);
    assert_eq!(stats.reoriented_families, 0);
}

#[test]
fn dispatch_trees() {
    assert_eq!(
        ocycle_af(75).unwrap().provenance.tree(),
        "75 = 2*37+1 [37 = 2*15+7 [15 = base]]"
    );
    assert_eq!(ocycle_any(9).unwrap().provenance.construction, "bose");
    assert_eq!(ocycle_any(7).unwrap().provenance.construction, "skolem");
    assert!(matches!(ocycle_any(11), Err(Error::InadmissibleOrder { order: 11 })));
}

#[test]
fn af_checks() {
    assert_eq!(
        is_af(&base_case(15).unwrap().parsed_sts, DEFAULT_BUDGET).0,
        AfVerdict::Af
    );
    assert_eq!(
        is_af(&base_case(19).unwrap().parsed_sts, DEFAULT_BUDGET).0,
        AfVerdict::Af
    );
    assert_eq!(is_af(&bose(3).unwrap(), DEFAULT_BUDGET).0, AfVerdict::NotAf);
    assert_eq!(is_af(&ocycle_af(31).unwrap().ts, DEFAULT_BUDGET).0, AfVerdict::Af);
}

#[test]
fn exhaustive_search() {
    for ts in [skolem(1).unwrap(), bose(3).unwrap()] {
        let c = exhaustive_ocycle_search(&ts, DEFAULT_SEARCH_LIMIT).unwrap().unwrap();
        assert!(validate_ocycle(&ts, c.blocks()).is_clean());
    }
    assert!(exhaustive_ocycle_search(&TripleSystem::trivial(), DEFAULT_SEARCH_LIMIT)
        .unwrap()
        .is_none());
}
