mod common;

use common::coded_image;
use proptest::prelude::*;
use vpatch_core::metrics::{
    entropy, mean_entropy, patch_area_trial, patch_size_stats, ssim, total_pixels_moved,
    PatchStats, ProbDist, SsimParams,
};
use vpatch_core::ImageTensor;

fn distribution() -> impl Strategy<Value = ProbDist> {
    proptest::collection::vec(0.0f64..1.0, 2..12).prop_filter_map("zero mass", |w| {
        let s: f64 = w.iter().sum();
        (s > 1e-6).then(|| ProbDist::new(w.iter().map(|v| v / s).collect()).unwrap())
    })
}

fn image_pair() -> impl Strategy<Value = (ImageTensor, ImageTensor)> {
    (11usize..24, 11usize..24, 1usize..4).prop_flat_map(|(w, h, c)| {
        let n = w * h * c;
        (
            proptest::collection::vec(0.0f32..=1.0, n),
            proptest::collection::vec(0.0f32..=1.0, n),
        )
            .prop_map(move |(a, b)| {
                (
                    ImageTensor::new(w, h, c, a).unwrap(),
                    ImageTensor::new(w, h, c, b).unwrap(),
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn entropy_lies_between_zero_and_log_k(p in distribution()) {
        let h = entropy(&p);
        let max = (p.classes() as f64).log2();
        prop_assert!(h >= 0.0);
        prop_assert!(h <= max + 1e-12);
    }

    #[test]
    fn uniform_is_the_unique_maximum(k in prop_oneof![Just(2usize), Just(10usize)], p in distribution()) {
        let u = entropy(&ProbDist::uniform(k).unwrap());
        prop_assert!((u - (k as f64).log2()).abs() < 1e-12);
        if p.classes() == k {
            let off = p.probs().iter().any(|&v| (v - 1.0 / k as f64).abs() > 1e-3);
            if off {
                prop_assert!(entropy(&p) < u);
            }
        }
    }

    #[test]
    fn mean_entropy_is_the_average(ps in proptest::collection::vec(distribution(), 1..8)) {
        let want = ps.iter().map(entropy).sum::<f64>() / ps.len() as f64;
        prop_assert!((mean_entropy(&ps).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn ssim_is_symmetric_and_reflexive((a, b) in image_pair()) {
        let p = SsimParams::default();
        prop_assert_eq!(ssim(&a, &a, &p).unwrap(), 1.0);
        let (ab, ba) = (ssim(&a, &b, &p).unwrap(), ssim(&b, &a, &p).unwrap());
        prop_assert!((ab - ba).abs() <= 1e-9);
        prop_assert!((-1.0..=1.0).contains(&ab));
    }

    #[test]
    fn stats_are_ordered(samples in proptest::collection::vec(0.0f64..5000.0, 1..50)) {
        let s = PatchStats::from_samples(50, &samples).unwrap();
        prop_assert!(s.min <= s.mean + 1e-9 && s.mean <= s.max + 1e-9);
        prop_assert!(s.std >= 0.0);
    }
}

#[test]
fn invalid_distributions_rejected() {
    assert!(ProbDist::new(vec![0.5, 0.6]).is_err());
    assert!(ProbDist::new(vec![1.2, -0.2]).is_err());
    assert!(ProbDist::new(vec![]).is_err());
    assert!(ProbDist::new(vec![0.5, 0.5 + 5e-7]).is_ok());
}

#[test]
fn entropy_reference_values() {
    assert_eq!(entropy(&ProbDist::one_hot(10, 3).unwrap()), 0.0);
    assert_eq!(entropy(&ProbDist::new(vec![0.5, 0.5]).unwrap()), 1.0);
    let h = entropy(&ProbDist::new(vec![0.5, 0.25, 0.25]).unwrap());
    assert!((h - 1.5).abs() < 1e-15);
}

#[test]
fn ssim_reference_values() {
    let p = SsimParams::default();
    let a = coded_image(32, 32);
    let shifted = ImageTensor::from_fn(32, 32, 3, |x, y, c| a.pixel(x, y)[c] * 0.5 + 0.25);
    let s = ssim(&a, &shifted, &p).unwrap();
    assert!(s < 1.0 && s > 0.0);
    let small = ImageTensor::zeros(10, 10, 1);
    assert!(ssim(&small, &small, &p).is_err());
}

#[test]
fn totals_scale_linearly() {
    let s = patch_size_stats(70, 224, 224, 20, 11).unwrap();
    assert_eq!(total_pixels_moved(&s, 15) / total_pixels_moved(&s, 5), 3.0);
    assert_eq!(total_pixels_moved(&s, 1), s.mean);
}

#[test]
fn stats_are_schedule_independent() {
    let s = patch_size_stats(50, 128, 128, 10, 4).unwrap();
    let mut samples: Vec<f64> = (0..10)
        .rev()
        .filter_map(|t| patch_area_trial(50, 128, 128, 4, t).unwrap())
        .collect();
    samples.reverse();
    assert_eq!(PatchStats::from_samples(50, &samples).unwrap(), s);
}

#[test]
fn mean_area_decreases_with_generator_count() {
    let means: Vec<f64> = [50, 70, 90]
        .iter()
        .map(|&n| patch_size_stats(n, 224, 224, 500, 2024).unwrap().mean)
        .collect();
    assert!(means[0] > means[1] && means[1] > means[2], "{means:?}");
}
