import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class PageTitleService {
  initPage(title: string) {
    console.log(`Initializing page: ${title}`);
  }
}
