//! Property tests for the conceptual-space core: metric axioms for the
//! normalized distance, hull semantics for regions, and unit conversions.

use proptest::prelude::*;
use rpsl_core::model::{
    build_region, builtin_registry, convert_quantity, euclidean_distance, normalize_value,
    DimRef, DistanceAxis, Interval, Knoxel, Quantity, Unit,
};

fn axes() -> Vec<DistanceAxis> {
    vec![
        DistanceAxis::new(DimRef::new("Size", "Height")).with_interval(Interval::new(20.0, 40.0)),
        DistanceAxis::new(DimRef::new("Size", "Width")).with_interval(Interval::new(20.0, 40.0)),
        // Degenerate interval, no canonical: falls back to width 1.
        DistanceAxis::new(DimRef::new("Size", "Length"))
            .with_interval(Interval::new(100.0, 100.0)),
        DistanceAxis::new(DimRef::new("RGB", "Blue"))
            .with_interval(Interval::new(100.0, 130.0))
            .with_canonical(Interval::new(0.0, 255.0)),
    ]
}

fn knoxel_strategy() -> impl Strategy<Value = Knoxel> {
    (
        -500.0..500.0f64,
        -500.0..500.0f64,
        -500.0..500.0f64,
        0.0..255.0f64,
    )
        .prop_map(|(h, w, l, b)| {
            Knoxel::new()
                .with(DimRef::new("Size", "Height"), Quantity::new(h, Unit::Mm))
                .with(DimRef::new("Size", "Width"), Quantity::new(w, Unit::Mm))
                .with(DimRef::new("Size", "Length"), Quantity::new(l, Unit::Mm))
                .with(DimRef::new("RGB", "Blue"), Quantity::dimensionless(b))
        })
}

proptest! {
    #[test]
    fn distance_satisfies_the_metric_axioms(
        a in knoxel_strategy(),
        b in knoxel_strategy(),
        c in knoxel_strategy(),
    ) {
        let axes = axes();
        let dab = euclidean_distance(&a, &b, &axes, true).unwrap();
        let dba = euclidean_distance(&b, &a, &axes, true).unwrap();
        let daa = euclidean_distance(&a, &a, &axes, true).unwrap();
        let dac = euclidean_distance(&a, &c, &axes, true).unwrap();
        let dbc = euclidean_distance(&b, &c, &axes, true).unwrap();

        prop_assert!(dab >= 0.0);
        // Squared differences are computed symmetrically, so this is exact.
        prop_assert_eq!(dab, dba);
        prop_assert!(daa.abs() < 1e-12);
        prop_assert!(dac <= dab + dbc + 1e-9, "d(a,c)={dac} > d(a,b)+d(b,c)={}", dab + dbc);
    }

    #[test]
    fn unnormalized_distance_is_also_a_metric(
        a in knoxel_strategy(),
        b in knoxel_strategy(),
        c in knoxel_strategy(),
    ) {
        let axes = axes();
        let dab = euclidean_distance(&a, &b, &axes, false).unwrap();
        let dac = euclidean_distance(&a, &c, &axes, false).unwrap();
        let dbc = euclidean_distance(&b, &c, &axes, false).unwrap();
        prop_assert!(dab >= 0.0);
        prop_assert!(dac <= dab + dbc + 1e-9);
    }

    #[test]
    fn region_hull_is_exactly_min_max_per_dimension(
        heights in prop::collection::vec(-100.0..100.0f64, 1..8),
        widths in prop::collection::vec(-100.0..100.0f64, 1..8),
    ) {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let h = DimRef::new("Size", "Height");
        let w = DimRef::new("Size", "Width");
        let l = DimRef::new("Size", "Length");

        let mut points: Vec<(DimRef, Quantity)> = Vec::new();
        for v in &heights {
            points.push((h.clone(), Quantity::new(*v, Unit::Mm)));
        }
        for v in &widths {
            points.push((w.clone(), Quantity::new(*v, Unit::Mm)));
        }
        points.push((l.clone(), Quantity::new(10.0, Unit::Mm)));

        let region = build_region(&[size], &points).unwrap();
        let min = |xs: &[f64]| xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = |xs: &[f64]| xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

        let hi = region.interval(&h).unwrap();
        prop_assert_eq!(hi.lo, min(&heights));
        prop_assert_eq!(hi.hi, max(&heights));
        let wi = region.interval(&w).unwrap();
        prop_assert_eq!(wi.lo, min(&widths));
        prop_assert_eq!(wi.hi, max(&widths));
        let li = region.interval(&l).unwrap();
        prop_assert_eq!((li.lo, li.hi), (10.0, 10.0));
    }

    #[test]
    fn region_is_invariant_under_point_order(
        values in prop::collection::vec((0usize..3, -100.0..100.0f64), 3..20)
    ) {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let dims = [
            DimRef::new("Size", "Height"),
            DimRef::new("Size", "Width"),
            DimRef::new("Size", "Length"),
        ];
        // Guarantee coverage, then add the random points.
        let mut points: Vec<(DimRef, Quantity)> = dims
            .iter()
            .map(|d| (d.clone(), Quantity::new(0.0, Unit::Mm)))
            .collect();
        for (idx, v) in &values {
            points.push((dims[*idx].clone(), Quantity::new(*v, Unit::Mm)));
        }

        let forward = build_region(&[size], &points).unwrap();
        points.reverse();
        let backward = build_region(&[size], &points).unwrap();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn growing_the_point_set_never_shrinks_membership(
        base in prop::collection::vec((0usize..3, -100.0..100.0f64), 3..12),
        extra in prop::collection::vec((0usize..3, -100.0..100.0f64), 0..6),
        probe in (-150.0..150.0f64, -150.0..150.0f64, -150.0..150.0f64),
    ) {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let dims = [
            DimRef::new("Size", "Height"),
            DimRef::new("Size", "Width"),
            DimRef::new("Size", "Length"),
        ];
        let mut points: Vec<(DimRef, Quantity)> = dims
            .iter()
            .map(|d| (d.clone(), Quantity::new(0.0, Unit::Mm)))
            .collect();
        for (idx, v) in &base {
            points.push((dims[*idx].clone(), Quantity::new(*v, Unit::Mm)));
        }
        let small = build_region(&[size], &points).unwrap();
        for (idx, v) in &extra {
            points.push((dims[*idx].clone(), Quantity::new(*v, Unit::Mm)));
        }
        let large = build_region(&[size], &points).unwrap();

        let knoxel = Knoxel::new()
            .with(dims[0].clone(), Quantity::new(probe.0, Unit::Mm))
            .with(dims[1].clone(), Quantity::new(probe.1, Unit::Mm))
            .with(dims[2].clone(), Quantity::new(probe.2, Unit::Mm));
        if small.contains(&knoxel) {
            prop_assert!(large.contains(&knoxel));
        }
    }

    #[test]
    fn normalize_maps_interval_ends_to_zero_and_one(
        lo in -1000.0..1000.0f64,
        width in 0.001..1000.0f64,
        t in 0.0..1.0f64,
    ) {
        let interval = Interval::new(lo, lo + width);
        prop_assert!((normalize_value(lo, interval, None) - 0.0).abs() < 1e-12);
        prop_assert!((normalize_value(lo + width, interval, None) - 1.0).abs() < 1e-9);
        let mid = lo + t * width;
        let n = normalize_value(mid, interval, None);
        prop_assert!((-1e-9..=1.0 + 1e-9).contains(&n));
    }

    #[test]
    fn normalization_is_monotone(
        lo in -1000.0..1000.0f64,
        width in 0.001..1000.0f64,
        a in -2000.0..2000.0f64,
        b in -2000.0..2000.0f64,
    ) {
        let interval = Interval::new(lo, lo + width);
        let (small, big) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(
            normalize_value(small, interval, None) <= normalize_value(big, interval, None)
        );
    }

    #[test]
    fn unit_conversion_round_trips(
        value in -1_000_000.0..1_000_000.0f64,
        pair in prop::sample::select(vec![
            (Unit::Mm, Unit::Cm),
            (Unit::Mm, Unit::M),
            (Unit::Cm, Unit::M),
            (Unit::Ms, Unit::S),
            (Unit::Ms, Unit::Min),
            (Unit::S, Unit::Min),
        ]),
    ) {
        let (from, to) = pair;
        let q = Quantity::new(value, from);
        let converted = convert_quantity(q, to).unwrap();
        let back = convert_quantity(converted, from).unwrap();
        let tolerance = 1e-9 * value.abs().max(1.0);
        prop_assert!((back.value - value).abs() <= tolerance);
        prop_assert_eq!(back.unit, from);
        // Conversion preserves the base-unit magnitude.
        prop_assert!((converted.to_base() - q.to_base()).abs() <= tolerance);
    }

    #[test]
    fn cross_kind_conversion_always_fails(
        value in -1000.0..1000.0f64,
        length in prop::sample::select(vec![Unit::Mm, Unit::Cm, Unit::M]),
        time in prop::sample::select(vec![Unit::Ms, Unit::S, Unit::Min]),
    ) {
        prop_assert!(convert_quantity(Quantity::new(value, length), time).is_err());
        prop_assert!(convert_quantity(Quantity::new(value, time), length).is_err());
    }
}
