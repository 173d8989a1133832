// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0
//
// Embeds a curved text line, prints its signature and how well the degree-5
// reconstruction covers the original polygon.

#include <iostream>

#include "fce/fce.hpp"
#include "fce/synthetic.hpp"

int main() {
  fce::synthetic::RibbonShape shape;
  shape.origin = {40, 120};
  shape.length = 300;
  shape.height = 50;
  shape.amplitude = 35;
  shape.wavelength = 420;
  const fce::Contour text = fce::synthetic::ribbon(shape);

  const fce::FourierSignature sig = fce::embed(text);  // K = 5, N = 400
  std::cout << "signature (" << sig.flat().size() << " values): " << fce::format_numbers(sig.flat(), ' ') << "\n";

  const fce::Contour fit = fce::reconstruct(sig);  // N' = 50
  std::cout << "IoU(original, reconstruction) = " << fce::format_number(fce::polygon_iou(text, fit, 8)) << "\n";
  return 0;
}
