/** Browser entry point; tests drive ExplorerApp directly instead. */

import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

function boot(): void {
  const root = document.getElementById("app");
  if (!root) {
    return;
  }
  const base =
    (window as unknown as { GEM_API_BASE?: string }).GEM_API_BASE ?? "";
  const app = new ExplorerApp(root, new ApiClient(base), window);
  void app.start();
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", boot);
} else {
  boot();
}
