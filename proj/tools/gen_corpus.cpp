// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0
//
// Writes the bundled synthetic corpora under a target directory:
//   ribbons.jsonl  50 curved text lines, one per image
//   circles.jsonl  20 circles
//   subset.jsonl   10 straight lines + 10 strongly bent arcs
//   scenes.jsonl   20 multi-instance detection scenes

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fce/annotations.hpp"
#include "fce/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fce_gen_corpus OUT_DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::vector<fce::AnnotatedImage>& images) {
    std::ofstream out(dir / name, std::ios::binary);
    fce::write_jsonl(out, images);
  };
  write("ribbons.jsonl", fce::synthetic::ribbon_corpus(50));
  write("circles.jsonl", fce::synthetic::circle_corpus(20));
  write("subset.jsonl", fce::synthetic::subset_corpus());
  write("scenes.jsonl", fce::synthetic::scene_corpus(20));
  return 0;
}
