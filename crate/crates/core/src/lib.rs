//! VoronoiPatches image augmentation, without `std`.
//!
//! The crate partitions an image plane into a Voronoi diagram, picks bounded
//! cells as patches and transports their pixels onto the centroids of other
//! bounded cells, optionally smoothing the seams with a Gaussian blur. The
//! Random Erasing baseline, channel-wise min-max scaling and the analysis
//! metrics (entropy, SSIM, Monte Carlo patch statistics) live alongside it.
//!
//! Everything here is a pure function of its inputs and an explicit random
//! stream, so identical `(image, config, seed)` triples produce bit-identical
//! output on every platform. Image and file IO, the batch pipeline and the
//! command line tool live in the `vpatch` crate.
//!
//! # `no_std`
//!
//! The crate only needs `alloc`. Floating point functions come from `libm`.
//!
//! # Example
//!
//! ```
//! use vpatch_core::{augment::{voronoi_patches, VpConfig}, rng::seeded, ImageTensor};
//!
//! let image = ImageTensor::from_fn(64, 64, 3, |x, y, c| ((x + y + c) % 7) as f32 / 6.0);
//! let cfg = VpConfig { generators: 30, patches: 4, ..VpConfig::default() };
//! let out = voronoi_patches(&image, &cfg, &mut seeded(7)).unwrap();
//! assert_eq!(out.image.dims(), image.dims());
//! assert_eq!(out.moves.len(), 4);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod augment;
mod error;
pub mod geometry;
mod image;
pub mod metrics;
pub mod rng;

pub use error::{Error, Result};
pub use image::{ImageTensor, PixelMask};

/// Version of the library, shared by every front end built on it.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
