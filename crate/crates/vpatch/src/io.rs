//! Image files to and from [`ImageTensor`].

use std::fs;
use std::path::Path;

use image::{ImageBuffer, Rgb};
use vpatch_core::ImageTensor;

use crate::error::{PipelineError, Result};

/// Decodes any supported image into a 3-channel tensor holding the raw
/// 8-bit sample values (0..=255) as floats.
pub fn load_rgb(path: &Path) -> Result<ImageTensor> {
    let img = image::open(path)
        .map_err(|source| PipelineError::Image {
            path: path.to_path_buf(),
            source,
        })?
        .to_rgb8();
    let (w, h) = img.dimensions();
    let data = img.into_raw().into_iter().map(f32::from).collect();
    Ok(ImageTensor::new(w as usize, h as usize, 3, data)?)
}

/// Like [`load_rgb`], scaled by 1/255 into `[0, 1]`.
pub fn load_unit(path: &Path) -> Result<ImageTensor> {
    let mut t = load_rgb(path)?;
    t.as_mut_slice().iter_mut().for_each(|v| *v /= 255.0);
    Ok(t)
}

/// 8-bit quantization: `round(clamp(v, 0, 1) * 255)`.
#[inline]
pub fn quantize(v: f32) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

/// Encodes a `[0, 1]` tensor with 1 or 3 channels as 8-bit PNG bytes.
pub fn encode_png(t: &ImageTensor) -> Result<Vec<u8>> {
    let rgb = to_rgb8(t)?;
    let mut bytes = Vec::new();
    rgb.write_to(
        &mut std::io::Cursor::new(&mut bytes),
        image::ImageFormat::Png,
    )
    .map_err(|source| PipelineError::Image {
        path: "<memory>".into(),
        source,
    })?;
    Ok(bytes)
}

pub fn save_png(t: &ImageTensor, path: &Path) -> Result<()> {
    let bytes = encode_png(t)?;
    fs::write(path, bytes).map_err(|e| PipelineError::io(path, e))
}

fn to_rgb8(t: &ImageTensor) -> Result<ImageBuffer<Rgb<u8>, Vec<u8>>> {
    let (w, h, ch) = t.dims();
    let raw: Vec<u8> = match ch {
        3 => t.as_slice().iter().map(|&v| quantize(v)).collect(),
        1 => t
            .as_slice()
            .iter()
            .flat_map(|&v| [quantize(v); 3])
            .collect(),
        _ => {
            return Err(PipelineError::Config(format!(
                "cannot encode {ch}-channel image"
            )))
        }
    };
    Ok(ImageBuffer::from_raw(w as u32, h as u32, raw).expect("buffer length matches dimensions"))
}
