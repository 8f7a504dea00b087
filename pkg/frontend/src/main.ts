// App shell: gallery loader on the left, live board on the right.

import { Board } from "./board.js";
import { GALLERY } from "./examples.js";
import { ProtocolClient } from "./protocol.js";

export function mountApp(root: HTMLElement, base: string): void {
  const client = new ProtocolClient(base);
  root.innerHTML = "";
  const loader = document.createElement("div");
  loader.className = "gallery";
  loader.dataset.gallery = "";
  const boardHost = document.createElement("div");
  boardHost.className = "board-host";
  boardHost.dataset.boardHost = "";
  root.append(loader, boardHost);

  const title = document.createElement("h1");
  title.textContent = "the dollar game";
  loader.appendChild(title);

  let board: Board | null = null;
  for (const entry of GALLERY) {
    const button = document.createElement("button");
    button.dataset.example = entry.name;
    button.className = "example";
    const name = document.createElement("strong");
    name.textContent = entry.name.replaceAll("_", " ");
    const blurb = document.createElement("small");
    blurb.textContent = ` ${entry.blurb}`;
    button.append(name, blurb);
    button.addEventListener("click", () => {
      if (board) void client.close(board.session).catch(() => undefined);
      board = new Board({
        client,
        doc: entry.document,
        dim: entry.dim,
        root: boardHost,
        onClosed: () => {
          boardHost.innerHTML = "<p>session closed; pick an example</p>";
        },
      });
      void board.start();
    });
    loader.appendChild(button);
  }
}

declare global {
  interface Window {
    chipfireMount?: typeof mountApp;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app")!, "");
}
if (typeof window !== "undefined") {
  window.chipfireMount = mountApp;
}
