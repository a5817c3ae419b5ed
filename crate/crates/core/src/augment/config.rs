use crate::{Error, Result};

/// What gets pasted at a patch's new location.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum FillMode {
    /// Pixels copied from the source region of the original image.
    #[default]
    Transport,
    /// I.i.d. uniform `[0, 1)` values per pixel and channel.
    RandomFill,
}

/// VoronoiPatches hyperparameters.
///
/// The evaluated grid was `generators` in {50, 70, 90}, `patches` in
/// {5, 10, 15} and `smooth` in {true, false}. `border_width` and
/// `blur_sigma` only matter when `smooth` is set.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct VpConfig {
    pub generators: usize,
    pub patches: usize,
    pub smooth: bool,
    /// Half-width of the smoothed band around each pasted patch, in pixels.
    pub border_width: usize,
    pub blur_sigma: f64,
    pub fill_mode: FillMode,
}

impl Default for VpConfig {
    fn default() -> Self {
        Self {
            generators: 70,
            patches: 15,
            smooth: false,
            border_width: 2,
            blur_sigma: 1.0,
            fill_mode: FillMode::Transport,
        }
    }
}

impl VpConfig {
    pub fn validate(&self) -> Result<()> {
        if self.generators < 3 {
            return Err(Error::invalid("generators must be at least 3"));
        }
        if self.patches < 1 {
            return Err(Error::invalid("patches must be at least 1"));
        }
        if self.border_width < 1 {
            return Err(Error::invalid("border_width must be at least 1"));
        }
        if !(self.blur_sigma > 0.0 && self.blur_sigma.is_finite()) {
            return Err(Error::invalid("blur_sigma must be positive and finite"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EraseFill {
    /// Erased pixels become 0.0.
    #[default]
    Black,
    /// Erased pixels become i.i.d. uniform `[0, 1)` per channel.
    RandomUniform,
}

/// Random Erasing parameters. Defaults follow the original method:
/// probability 0.5, area fraction in `[0.02, 0.4)`, aspect ratio in
/// `[0.3, 1 / 0.3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct ReConfig {
    pub probability: f64,
    pub area_fraction_range: (f64, f64),
    pub aspect_range: (f64, f64),
    pub fill: EraseFill,
}

impl Default for ReConfig {
    fn default() -> Self {
        Self {
            probability: 0.5,
            area_fraction_range: (0.02, 0.4),
            aspect_range: (0.3, 1.0 / 0.3),
            fill: EraseFill::Black,
        }
    }
}

impl ReConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.probability) {
            return Err(Error::invalid("probability must lie in [0, 1]"));
        }
        let (a0, a1) = self.area_fraction_range;
        if !(a0 > 0.0 && a0 <= a1 && a1 <= 1.0) {
            return Err(Error::invalid(
                "area_fraction_range must satisfy 0 < low <= high <= 1",
            ));
        }
        let (r0, r1) = self.aspect_range;
        if !(r0 > 0.0 && r0 <= r1 && r1.is_finite()) {
            return Err(Error::invalid("aspect_range must satisfy 0 < low <= high"));
        }
        Ok(())
    }
}
