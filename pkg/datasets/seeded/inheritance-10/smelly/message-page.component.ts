import { Component, Injectable } from '@angular/core';

export class BaseMessagePageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}

@Component({
  selector: 'app-message-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class MessagePageComponent extends BaseMessagePageComponent {
  pageTitle = 'Message Page';
}
