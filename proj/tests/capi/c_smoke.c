/*
 * Copyright 2026 The coirank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as C to keep the public header usable from plain C. */

#include <stdio.h>
#include <string.h>

#include "coirank/coirank.h"

int main(void) {
  const char* data = "{\"id\":\"p\",\"year\":2000,\"authors\":[{\"name\":\"Ann Lee\"}]}\n";
  coirank_config* config = NULL;
  coirank_session* session = NULL;
  size_t papers;

  if (coirank_config_create(&config) != COIRANK_OK) return 1;
  if (coirank_config_set(config, "max-year", "2030") != COIRANK_OK) return 1;
  if (coirank_session_open_memory(config, data, strlen(data), &session) != COIRANK_OK) {
    fprintf(stderr, "%s\n", coirank_last_error());
    return 1;
  }
  coirank_config_destroy(config);
  if (coirank_session_rank(session, COIRANK_ALGO_PANDORA) != COIRANK_OK) return 1;
  papers = coirank_session_paper_count(session);
  coirank_session_destroy(session);
  printf("coirank %s: %zu paper(s)\n", coirank_version(), papers);
  return papers == 1 ? 0 : 1;
}
