import { ConsoleApp } from "./app.js";
import { HttpApiClient } from "./api.js";
import { MockApiClient } from "./mock.js";

declare global {
  interface Window {
    LCMS_BASE_URL?: string;
  }
}

const params = new URLSearchParams(window.location.search);
const client = params.get("mock")
  ? new MockApiClient()
  : new HttpApiClient(window.LCMS_BASE_URL ?? "http://127.0.0.1:8000");

const app = new ConsoleApp(document, client);
void app.newScene();
