import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-message-view', template: `<p>{{ title }}</p>` })
export class MessageViewComponent { title = 'Message view'; }
